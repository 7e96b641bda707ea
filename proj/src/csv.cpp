#include <cstdio>
#include <ostream>
#include <string>

#include "cvq/experiments.hpp"

namespace cvq {

const char* const kCsvHeader =
    "family,P00_or_x,mean_N,g_tau_A,g_tau_B,delta_tau_A,delta_tau_B,A1,A2,B1,B2,eof,"
    "concurrence,lambda4_pt,x_form,n_max,trace_err,error";

const char* const kPeaksCsvHeader = "family,g_tau_max,state_max,eof_max,P00,P11";

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Real amplitudes print as plain numbers, complex ones as re+imj.
std::string format_amplitude(cplx z) {
  if (z.imag() == 0.0) return format_number(z.real());
  std::string s = format_number(z.real());
  const std::string im = format_number(z.imag());
  if (im.front() != '-') s += '+';
  return s + im + 'j';
}

std::string quote_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << to_string(r.family) << ',' << format_number(r.state_parameter) << ','
        << format_number(r.mean_n) << ',' << format_number(r.arm_a.g_tau) << ','
        << format_number(r.arm_b.g_tau) << ',' << format_number(r.arm_a.delta_tau) << ','
        << format_number(r.arm_b.delta_tau) << ',' << format_amplitude(r.prep_a.ground_amp) << ','
        << format_amplitude(r.prep_a.excited_amp) << ',' << format_amplitude(r.prep_b.ground_amp)
        << ',' << format_amplitude(r.prep_b.excited_amp) << ',';
    if (r.ok()) {
      out << format_number(r.ent.eof) << ',' << format_number(r.ent.concurrence) << ','
          << format_number(r.ent.lambda4) << ',' << (r.ent.x_form ? 1 : 0) << ',' << r.n_max
          << ',' << format_number(r.trace_err) << ',';
    } else {
      out << ",,,,,," << quote_field(r.error);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("CSV write failed");
}

void write_peaks_csv(Family f, const std::vector<PeakRow>& rows, std::ostream& out) {
  out << kPeaksCsvHeader << '\n';
  for (const PeakRow& p : rows) {
    out << to_string(f) << ',' << format_number(p.g_tau) << ',' << format_number(p.state_value)
        << ',' << format_number(p.eof) << ',' << format_number(p.p00) << ','
        << format_number(p.p11) << '\n';
  }
  if (!out) throw std::runtime_error("CSV write failed");
}

}  // namespace cvq
