#include "dorder/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dorder/errors.hpp"

namespace dorder::io {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  for (auto& c : cells) {
    const auto b = c.find_first_not_of(" \t\r");
    const auto e = c.find_last_not_of(" \t\r");
    c = b == std::string::npos ? std::string{} : c.substr(b, e - b + 1);
  }
  return cells;
}

double parse_number(const std::string& cell, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (cell.empty() || used != cell.size()) {
    throw_invalid("phi csv line " + std::to_string(line) + ": '" + cell + "' is not a number");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  out_ += escape(k);
  out_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  out_ += json_number(v);
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separate();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  separate();
  out_ += escape(v);
  return *this;
}

JsonWriter& JsonWriter::value(Complex z) {
  begin_object();
  key("re").value(z.real());
  key("im").value(z.imag());
  return end_object();
}

std::string roots_json(double beta, std::span<const CharacteristicRoot> rs) {
  JsonWriter w;
  w.begin_object().key("beta").value(beta).key("roots").begin_array();
  for (const auto& r : rs) {
    const Complex v = r.value();
    w.begin_object()
        .key("k").value(r.k)
        .key("re").value(v.real())
        .key("im").value(v.imag())
        .key("abs_char_fn").value(std::abs(char_fn(r.lambda, beta)))
        .end_object();
  }
  w.end_array().end_object();
  return w.str() + "\n";
}

std::string roots_csv(double beta, std::span<const CharacteristicRoot> rs) {
  std::string out = "k,re,im,abs_char_fn\n";
  for (const auto& r : rs) {
    const Complex v = r.value();
    out += std::to_string(r.k) + "," + format_double(v.real()) + "," + format_double(v.imag()) + "," +
           format_double(std::abs(char_fn(r.lambda, beta))) + "\n";
  }
  return out;
}

std::string series_json(const SpectralSeries& s) {
  const SeriesDiagnostics& d = s.diagnostics();
  JsonWriter w;
  w.begin_object().key("beta").value(s.beta()).key("kmax").value(s.k_max());
  w.key("coefficients").begin_array();
  for (const auto& [k, c] : s.coefficients()) {
    w.begin_object().key("k").value(k).key("re").value(c.real()).key("im").value(c.imag()).end_object();
  }
  w.end_array();
  w.key("diagnostics").begin_object();
  w.key("h_values").begin_array();
  for (const auto& [k, h] : d.h_values) {
    w.begin_object().key("k").value(k).key("re").value(h.real()).key("im").value(h.imag()).end_object();
  }
  w.end_array();
  w.key("min_denominator").value(d.min_denominator);
  w.key("neglected_tail").value(d.neglected_tail);
  w.key("zero_projection").value(d.zero_projection);
  w.end_object().end_object();
  return w.str() + "\n";
}

std::string evaluation_csv(std::span<const double> xs, std::span<const Complex> ys) {
  if (xs.size() != ys.size()) throw_invalid("evaluation table: x and y differ in length");
  std::string out = "x,y_re,y_im\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += format_double(xs[i]) + "," + format_double(ys[i].real()) + "," + format_double(ys[i].imag()) + "\n";
  }
  return out;
}

std::string report_json(const VerificationReport& r) {
  JsonWriter w;
  w.begin_object().key("ok").value(r.ok());
  w.key("unexpected_failures").value(static_cast<int>(r.unexpected_failures()));
  w.key("checks").begin_array();
  for (const CheckResult& c : r.checks()) {
    w.begin_object()
        .key("name").value(c.name)
        .key("target").value(c.target)
        .key("achieved").value(c.achieved)
        .key("pass").value(c.pass)
        .key("expected_fail").value(c.expected_fail)
        .key("details").value(c.details)
        .end_object();
  }
  w.end_array().end_object();
  return w.str() + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::string out;
  for (const CheckResult& c : r.checks()) {
    const char* tag = c.pass ? "PASS" : (c.expected_fail ? "XFAIL" : "FAIL");
    out += std::string(tag) + "  " + c.name + "  achieved=" + format_double(c.achieved) +
           " target=" + format_double(c.target);
    if (!c.details.empty()) out += "  (" + c.details + ")";
    out += "\n";
  }
  out += r.ok() ? "verify: ok\n"
                : "verify: " + std::to_string(r.unexpected_failures()) + " unexpected failure(s)\n";
  return out;
}

SampledPhi read_phi_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = split(line);
    break;
  }
  const bool has_im = header.size() == 3 && header[2] == "im";
  if (header.size() < 2 || header[0] != "alpha" || header[1] != "re" || (header.size() == 3 && !has_im) ||
      header.size() > 3) {
    throw_invalid("phi csv header must be 'alpha,re' or 'alpha,re,im'");
  }
  SampledPhi phi;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw_invalid("phi csv line " + std::to_string(lineno) + ": expected " +
                    std::to_string(header.size()) + " columns");
    }
    phi.alphas.push_back(parse_number(cells[0], lineno));
    const double re = parse_number(cells[1], lineno);
    const double im = has_im ? parse_number(cells[2], lineno) : 0.0;
    phi.values.emplace_back(re, im);
  }
  return phi;
}

}  // namespace dorder::io
