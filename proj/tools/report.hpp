#ifndef RICLAB_TOOLS_REPORT_HPP
#define RICLAB_TOOLS_REPORT_HPP

#include <string>

#include "json.hpp"
#include "riclab/counterexample.hpp"
#include "riclab/omp.hpp"
#include "riclab/oracle.hpp"
#include "riclab/ric.hpp"

namespace riclab {

// Reports keep a fixed field order (insertion order) so identical configs
// reproduce byte-identical payloads; `timing` is the only field excluded
// from that contract.
using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1";

OrderedJson json_of(const SparseSignal& x);
OrderedJson json_of(const DenseMatrix& m);
OrderedJson json_of(const OmpTrace& trace);
OrderedJson json_of(const RicReport& r);
OrderedJson json_of(const ConditionReport& r);
OrderedJson json_of(const WitnessReport& r);
OrderedJson json_of(const GapFinding& f);

OrderedJson report_envelope(const std::string& command, OrderedJson config, OrderedJson results,
                            double wall_seconds);

// Serialized report with a trailing newline.
std::string render_json(const OrderedJson& report);

// CSV helpers: fields joined with commas; numbers at 17 significant digits.
std::string csv_escape(const std::string& field);
std::string csv_num(double v);

}  // namespace riclab

#endif
