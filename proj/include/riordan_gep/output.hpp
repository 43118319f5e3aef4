#pragma once

// Output documents and their pretty, JSON and CSV renderings.
// JSON shape: {"kind": ..., "n"?: int, "rows"?: int, "cols"?: int, "entries": [[string]]}.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "riordan_gep/matrix.hpp"
#include "riordan_gep/poly.hpp"
#include "riordan_gep/rational.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

enum class DocKind { Polynomial, SeriesCoeffs, Matrix, VerifyReport };

inline const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::Polynomial: return "polynomial";
    case DocKind::SeriesCoeffs: return "series";
    case DocKind::Matrix: return "matrix";
    case DocKind::VerifyReport: return "verify-report";
  }
  return "?";
}

inline DocKind parse_doc_kind(const std::string& s) {
  for (DocKind k : {DocKind::Polynomial, DocKind::SeriesCoeffs, DocKind::Matrix, DocKind::VerifyReport})
    if (s == to_string(k)) return k;
  fail(ErrorKind::InvalidArgument, "unknown document kind '" + s + "'");
}

enum class OutputFormat { Pretty, Json, Csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "pretty") return OutputFormat::Pretty;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  fail(ErrorKind::InvalidArgument, "unknown format '" + s + "'");
}

/// Verify reports hold rows (suite, check, "pass"|"fail", detail); every other kind holds rationals.
struct OutputDoc {
  DocKind kind = DocKind::Polynomial;
  std::optional<int> n;
  std::optional<int> rows;
  std::optional<int> cols;
  std::vector<std::vector<std::string>> entries;

  friend bool operator==(const OutputDoc&, const OutputDoc&) = default;
};

inline OutputDoc doc_polynomial(const Poly& p, std::optional<int> n = std::nullopt) {
  OutputDoc d{DocKind::Polynomial, n, std::nullopt, std::nullopt, {{}}};
  const Poly t = p.trimmed();
  for (int i = 0; i <= std::max(t.degree(), 0); ++i) d.entries[0].push_back(to_string(t.coeff(i)));
  return d;
}

inline OutputDoc doc_series(const Series& s) {
  OutputDoc d{DocKind::SeriesCoeffs, s.order(), std::nullopt, std::nullopt, {{}}};
  for (int i = 0; i <= s.order(); ++i) d.entries[0].push_back(to_string(s[i]));
  return d;
}

inline OutputDoc doc_matrix(const RMatrix& m, std::optional<int> n = std::nullopt) {
  OutputDoc d{DocKind::Matrix, n, m.rows(), m.cols(), {}};
  for (int i = 0; i < m.rows(); ++i) {
    d.entries.emplace_back();
    for (int j = 0; j < m.cols(); ++j) d.entries.back().push_back(to_string(m(i, j)));
  }
  return d;
}

namespace detail {

inline std::string monomial_text(const Rational& c, int k) {
  std::string x = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
  if (k == 0) return to_string(c);
  const Rational a = abs(c);
  std::string coeff = a == 1 ? "" : is_integer(a) ? to_string(a) : "(" + to_string(a) + ")";
  return (c < 0 ? "-" : "") + coeff + x;
}

/// "x+11x^2-(1/2)x^3"; the zero polynomial renders as "0".
inline std::string poly_text(const std::vector<Rational>& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::string term = monomial_text(c[k], static_cast<int>(k));
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

inline std::vector<Rational> parse_row(const std::vector<std::string>& row) {
  std::vector<Rational> out;
  for (const auto& s : row) out.push_back(parse_rational(s));
  return out;
}

}  // namespace detail

inline std::string to_string(const Poly& p) { return detail::poly_text(p.coeffs()); }

inline std::string render_pretty(const OutputDoc& d) {
  std::ostringstream os;
  switch (d.kind) {
    case DocKind::Polynomial: os << detail::poly_text(detail::parse_row(d.entries.at(0))) << "\n"; break;
    case DocKind::SeriesCoeffs: {
      const auto c = detail::parse_row(d.entries.at(0));
      os << detail::poly_text(c) << "+O(x^" << c.size() << ")\n";
      break;
    }
    case DocKind::Matrix: {
      std::size_t width = 1;
      for (const auto& row : d.entries)
        for (const auto& s : row) width = std::max(width, s.size());
      for (const auto& row : d.entries) {
        for (std::size_t j = 0; j < row.size(); ++j)
          os << (j ? "  " : "") << std::string(width - row[j].size(), ' ') << row[j];
        os << "\n";
      }
      break;
    }
    case DocKind::VerifyReport: {
      std::size_t failures = 0;
      for (const auto& row : d.entries) {
        const bool ok = row.at(2) == "pass";
        failures += !ok;
        os << (ok ? "PASS " : "FAIL ") << row.at(0) << " " << row.at(1);
        if (row.size() > 3 && !row[3].empty()) os << " (" << row[3] << ")";
        os << "\n";
      }
      os << d.entries.size() << " checks, " << failures << " failed\n";
      break;
    }
  }
  return os.str();
}

inline std::string render_csv(const OutputDoc& d) {
  std::string out;
  for (const auto& row : d.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool quote = row[j].find_first_of(",\"\n") != std::string::npos;
      std::string cell = row[j];
      if (quote) {
        std::string q = "\"";
        for (char c : cell) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        cell = q + "\"";
      }
      out += (j ? "," : "") + cell;
    }
    out += "\n";
  }
  return out;
}

inline std::string emit_json(const OutputDoc& d) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(d.kind);
  if (d.n) j["n"] = *d.n;
  if (d.rows) j["rows"] = *d.rows;
  if (d.cols) j["cols"] = *d.cols;
  j["entries"] = d.entries;
  return j.dump();
}

inline OutputDoc parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("entries"))
    fail(ErrorKind::InvalidArgument, "document needs 'kind' and 'entries'");
  OutputDoc d;
  try {
    d.kind = parse_doc_kind(j.at("kind").get<std::string>());
    if (j.contains("n")) d.n = j.at("n").get<int>();
    if (j.contains("rows")) d.rows = j.at("rows").get<int>();
    if (j.contains("cols")) d.cols = j.at("cols").get<int>();
    d.entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("bad document field: ") + e.what());
  }
  if (d.kind != DocKind::VerifyReport)
    for (const auto& row : d.entries) detail::parse_row(row);
  return d;
}

inline std::string render(const OutputDoc& d, OutputFormat f) {
  switch (f) {
    case OutputFormat::Pretty: return render_pretty(d);
    case OutputFormat::Json: return emit_json(d) + "\n";
    case OutputFormat::Csv: return render_csv(d);
  }
  return {};
}

}  // namespace rgep
