#pragma once

// Plain-text layouts: value grids of C(D,2), the property table, and label
// prettifying.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cpo/funcspace.hpp"
#include "cpo/named.hpp"
#include "cpo/replication.hpp"

namespace cpo {

/// Columns taken by `s` in a terminal: code points, not counting combining
/// marks (U+0300..U+036F).
inline std::size_t display_width(std::string_view s) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    char32_t cp = c;
    if (c >= 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else if (c >= 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xC0) {
      len = 2;
      cp = c & 0x1F;
    }
    for (std::size_t k = 1; k < len && i + k < s.size(); ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    }
    if (cp < 0x300 || cp > 0x36F) ++width;
    i += len;
  }
  return width;
}

/// Left-aligned columns separated by two spaces; no trailing blanks.
inline std::string columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], display_width(r[i]));
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(widths[i] - display_width(r[i]) + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

/// "inf'" → "∞′", "2'" → "2′", "-inf" → "−∞".
inline std::string pretty_label(std::string_view label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label.substr(i, 3) == "inf") {
      out += "∞";
      i += 2;
    } else if (label[i] == '\'') {
      out += "′";
    } else if (label[i] == '-') {
      out += "−";
    } else {
      out += label[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Value grids

struct Grid {
  std::vector<std::string> columns;  // element labels
  std::vector<std::string> rows;     // segment names
  std::vector<std::vector<int>> cells;
};

/// Rows follow the canonical isomorphism when there is one (one row per
/// windowed element), otherwise the windowed segments of C(D,2) ascending.
inline Grid value_grid(const NamedCpo& c, std::uint64_t max_offset) {
  const auto& w = c.word();
  const auto elems = window(w, max_offset);
  Grid g;
  for (const auto& x : elems) g.columns.push_back(c.label(x));

  std::vector<OpenSegment> segs;
  if (self_iso(w).isomorphic) {
    const CanonicalIso phi(w);
    for (const auto& x : elems) segs.push_back(phi(x));
  } else {
    segs = scott_opens(w).window(max_offset);
  }
  for (const auto& s : segs) {
    g.rows.push_back(segment_name(c, s));
    std::vector<int> row;
    for (const auto& x : elems) row.push_back(eval_segment(w, s, x));
    g.cells.push_back(std::move(row));
  }
  return g;
}

inline std::string grid_text(const Grid& g) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"psi\\x"};
  for (const auto& col : g.columns) head.push_back(pretty_label(col));
  rows.push_back(std::move(head));
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    std::vector<std::string> r{g.rows[i]};
    for (int v : g.cells[i]) r.push_back(std::to_string(v));
    rows.push_back(std::move(r));
  }
  return columns(rows);
}

// ---------------------------------------------------------------------------
// Property table

inline std::string table8_text(const PipelineReport& r) {
  std::vector<std::vector<std::string>> rows{{"CPO", "Adjunction", "FPT", "Boundary", "Order type"}};
  for (const auto& row : r.table) {
    std::string name(symbol(row.cpo));
    if (!row.annotation.empty()) name += " (" + row.annotation + ")";
    rows.push_back({name, row.adjunction ? "Yes" : "No", row.fpt_applicable ? "Applicable" : "Not applicable",
                    row.boundary ? pretty_label(*row.boundary) : "N/A", to_string(row.order_type)});
  }
  return columns(rows);
}

}  // namespace cpo
