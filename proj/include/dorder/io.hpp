#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

#include "dorder/solvers.hpp"
#include "dorder/spectrum.hpp"
#include "dorder/verification.hpp"

namespace dorder::io {

/// 17 significant digits, so every double reads back bit-exact. Non-finite
/// values become `null` in JSON and `nan`/`inf` in CSV.
std::string format_double(double v);

/// Minimal streaming JSON emitter with insertion-ordered keys.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(Complex z);  // {"re": .., "im": ..}

  const std::string& str() const noexcept { return out_; }

 private:
  void separate();

  std::string out_;
  std::vector<bool> first_;  // per open container: nothing written yet
  bool after_key_ = false;
};

std::string roots_json(double beta, std::span<const CharacteristicRoot> rs);
std::string roots_csv(double beta, std::span<const CharacteristicRoot> rs);

/// {beta, kmax, coefficients: [{k, re, im}], diagnostics: {...}}
std::string series_json(const SpectralSeries& s);

/// x,y_re,y_im
std::string evaluation_csv(std::span<const double> xs, std::span<const Complex> ys);

std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

/// Header `alpha,re[,im]` then one row per node. Structural problems throw
/// InvalidArgument; node-count and spacing rules are left to
/// DataFunction::validate.
SampledPhi read_phi_csv(std::istream& in);

}  // namespace dorder::io
