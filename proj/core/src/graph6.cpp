#include "sperf/graph6.hpp"

#include <string>

#include "sperf/error.hpp"

namespace sperf {

namespace {

constexpr int kBias = 63;

int packed_length(int n) {
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  return static_cast<int>((bits + 5) / 6);
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(Errc::OrderTooLarge,
                "graph6 supports at most 62 vertices, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + packed_length(n));
  out.push_back(static_cast<char>(kBias + n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  }
  return out;
}

Graph parse_graph6(std::string_view record) {
  if (record.empty()) {
    throw Error(Errc::MalformedRecord, "empty graph6 record");
  }
  for (unsigned char c : record) {
    if (c < 63 || c > 126) {
      throw Error(Errc::MalformedRecord,
                  "byte " + std::to_string(c) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(record[0]) - kBias;
  if (n == 63) {
    throw Error(Errc::OrderTooLarge, "graph6 orders above 62 are not supported");
  }
  const int expected = packed_length(n);
  if (static_cast<int>(record.size()) != 1 + expected) {
    throw Error(Errc::MalformedRecord,
                "graph6 record for order " + std::to_string(n) + " needs " +
                    std::to_string(1 + expected) + " bytes, got " +
                    std::to_string(record.size()));
  }
  GraphBuilder b(n);
  int pos = 1;
  int bit = 5;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const int group = static_cast<unsigned char>(record[pos]) - kBias;
      if ((group >> bit) & 1) b.add_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  }
  // Padding bits must be zero for the record to round-trip.
  if (bit != 5) {
    const int group = static_cast<unsigned char>(record[pos]) - kBias;
    if ((group & ((1 << (bit + 1)) - 1)) != 0) {
      throw Error(Errc::MalformedRecord, "nonzero padding bits");
    }
  }
  return b.build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  long record = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first_line) {
      first_line = false;
      constexpr std::string_view header = ">>graph6<<";
      if (line.starts_with(header)) line.erase(0, header.size());
    }
    if (line.empty()) continue;
    ++record;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error(Errc::StreamParseError,
                  "record " + std::to_string(record) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace sperf
