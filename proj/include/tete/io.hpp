#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tete/error.hpp"
#include "tete/types.hpp"

namespace tete {

/// Doubles are written with 17 significant digits so they round-trip exactly.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline void split_csv(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

inline double parse_double(const std::string& tok, const std::string& path,
                           std::size_t line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError(path, line, "expected a number, got '" + tok + "'");
  }
  return v;
}

inline Index parse_index(const std::string& tok, const std::string& path,
                         std::size_t line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0' || v < 0) {
    throw ParseError(path, line,
                     "expected a non-negative integer, got '" + tok + "'");
  }
  return static_cast<Index>(v);
}

// Reads the next content line, stripping CR and skipping blanks and
// comments. Comment lines are returned through `comment` so the caller can
// pick up the "# objects=N" header; other comments are ignored.
inline bool next_line(std::istream& in, std::string& line, std::size_t& lineno,
                      std::string* comment) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (comment) *comment = line;
      comment = nullptr;  // only the first comment can carry the header
      continue;
    }
    return true;
  }
  return false;
}

}  // namespace detail

/// Triplet CSV: one "query,near,far" row per triplet, 0-based indices.
/// An optional leading comment "# objects=N" fixes the object count when
/// some objects appear in no triplet; otherwise N = 1 + max index.
/// A fourth column, when present, is a per-triplet weight.
inline WeightedTripletSet load_weighted_triplets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open triplet file: " + path);

  WeightedTripletSet wts;
  std::string line, header;
  std::size_t lineno = 0;
  std::vector<std::string> tok;
  Index max_index = -1;
  int ncols = 0;

  while (detail::next_line(in, line, lineno, header.empty() ? &header : nullptr)) {
    detail::split_csv(line, tok);
    if (tok.size() != 3 && tok.size() != 4) {
      throw ParseError(path, lineno, "expected 3 or 4 columns, got " +
                                         std::to_string(tok.size()));
    }
    if (ncols == 0) {
      ncols = static_cast<int>(tok.size());
    } else if (static_cast<int>(tok.size()) != ncols) {
      throw ParseError(path, lineno, "inconsistent column count");
    }
    Triplet tr{detail::parse_index(tok[0], path, lineno),
               detail::parse_index(tok[1], path, lineno),
               detail::parse_index(tok[2], path, lineno)};
    if (tr.query == tr.near || tr.query == tr.far || tr.near == tr.far) {
      throw ParseError(path, lineno, "degenerate triplet: repeated index");
    }
    double w = 1.0;
    if (tok.size() == 4) {
      w = detail::parse_double(tok[3], path, lineno);
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw ParseError(path, lineno, "weight must be finite and >= 0");
      }
    }
    max_index = std::max({max_index, tr.query, tr.near, tr.far});
    wts.base.triplets.push_back(tr);
    wts.weights.push_back(w);
  }

  wts.base.num_objects = max_index + 1;
  if (!header.empty()) {
    std::size_t pos = header.find("objects=");
    if (pos != std::string::npos) {
      Index n = detail::parse_index(header.substr(pos + 8), path, 1);
      if (n < wts.base.num_objects) {
        throw ParseError(path, 1,
                         "header object count " + std::to_string(n) +
                             " is smaller than 1 + max index " +
                             std::to_string(wts.base.num_objects - 1));
      }
      wts.base.num_objects = n;
    }
  }
  return wts;
}

/// Strict 3-column variant of the triplet format.
inline TripletSet load_triplets(const std::string& path) {
  WeightedTripletSet wts = load_weighted_triplets(path);
  for (double w : wts.weights) {
    if (w != 1.0) {
      throw ParseError(path, 0, "plain triplet file must not carry weights");
    }
  }
  return std::move(wts.base);
}

inline void write_comment_header(std::ostream& out,
                                 const std::vector<std::string>& echo) {
  for (const std::string& e : echo) out << "# " << e << "\n";
}

inline void save_triplets(const std::string& path, const TripletSet& ts,
                          const std::vector<std::string>& echo = {}) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write triplet file: " + path);
  out << "# objects=" << ts.num_objects << "\n";
  write_comment_header(out, echo);
  for (const Triplet& tr : ts.triplets) {
    out << tr.query << ',' << tr.near << ',' << tr.far << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

inline void save_weighted_triplets(const std::string& path,
                                   const WeightedTripletSet& wts,
                                   const std::vector<std::string>& echo = {}) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write triplet file: " + path);
  out << "# objects=" << wts.base.num_objects << "\n";
  write_comment_header(out, echo);
  for (std::size_t r = 0; r < wts.size(); ++r) {
    const Triplet& tr = wts.base.triplets[r];
    out << tr.query << ',' << tr.near << ',' << tr.far << ','
        << format_g17(wts.weights[r]) << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

/// Data CSV: one object per row, D real columns. With `labeled` the final
/// column is an integer class id.
inline LabeledDataset load_data(const std::string& path, bool labeled) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open data file: " + path);

  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> tok;
  std::size_t ncols = 0;

  while (detail::next_line(in, line, lineno, nullptr)) {
    detail::split_csv(line, tok);
    if (ncols == 0) {
      ncols = tok.size();
      if (ncols < (labeled ? 2u : 1u)) {
        throw ParseError(path, lineno, "too few columns");
      }
    } else if (tok.size() != ncols) {
      throw ParseError(path, lineno, "inconsistent column count");
    }
    std::size_t d = labeled ? ncols - 1 : ncols;
    std::vector<double> row(d);
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = detail::parse_double(tok[c], path, lineno);
    }
    if (labeled) {
      labels.push_back(
          static_cast<int>(detail::parse_index(tok[d], path, lineno)));
    }
    rows.push_back(std::move(row));
  }

  LabeledDataset ds;
  ds.data.resize(static_cast<Index>(rows.size()),
                 rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      ds.data(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
    }
  }
  if (labeled) ds.labels = std::move(labels);
  ds.validate();
  return ds;
}

inline void save_data(const std::string& path, const LabeledDataset& ds,
                      const std::vector<std::string>& echo = {}) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write data file: " + path);
  write_comment_header(out, echo);
  for (Index r = 0; r < ds.data.rows(); ++r) {
    for (Index c = 0; c < ds.data.cols(); ++c) {
      if (c) out << ',';
      out << format_g17(ds.data(r, c));
    }
    if (ds.labels) out << ',' << (*ds.labels)[static_cast<std::size_t>(r)];
    out << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

/// Embedding CSV: one row per object, d real columns, 17 significant digits.
inline void save_embedding(const std::string& path, const Matrix& y,
                           const std::vector<std::string>& echo = {}) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write embedding file: " + path);
  write_comment_header(out, echo);
  for (Index r = 0; r < y.rows(); ++r) {
    for (Index c = 0; c < y.cols(); ++c) {
      if (c) out << ',';
      out << format_g17(y(r, c));
    }
    out << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

inline Matrix load_embedding(const std::string& path) {
  LabeledDataset ds = load_data(path, false);
  return ds.data;
}

/// Objective trace CSV: "iteration,objective" per line.
inline void save_trace(const std::string& path,
                       const std::vector<double>& trace,
                       const std::vector<std::string>& echo = {}) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace file: " + path);
  write_comment_header(out, echo);
  for (std::size_t r = 0; r < trace.size(); ++r) {
    out << r << ',' << format_g17(trace[r]) << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace tete
