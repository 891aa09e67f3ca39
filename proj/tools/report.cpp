#include "report.hpp"

namespace riclab {

OrderedJson json_of(const SparseSignal& x) {
  OrderedJson j;
  j["len"] = x.len;
  j["support"] = x.support;
  j["values"] = x.values;
  return j;
}

OrderedJson json_of(const DenseMatrix& m) {
  OrderedJson j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.entries();
  return j;
}

OrderedJson json_of(const OmpTrace& trace) {
  OrderedJson j;
  j["iterations"] = OrderedJson::array();
  for (const auto& it : trace.iterations) {
    OrderedJson ji;
    ji["k"] = it.k;
    ji["correlations"] = it.correlations;
    ji["selected"] = it.selected;
    ji["tie"] = it.tie;
    ji["tied"] = it.tied;
    ji["support_after"] = it.support_after;
    ji["residual_norm"] = it.residual_norm;
    j["iterations"].push_back(std::move(ji));
  }
  j["final_estimate"] = json_of(trace.final_estimate);
  j["early_stopped"] = trace.early_stopped;
  return j;
}

OrderedJson json_of(const RicReport& r) {
  OrderedJson j;
  j["order"] = r.order;
  j["delta"] = r.delta;
  j["witness_subset"] = r.witness_subset;
  j["lambda_min"] = r.lambda_min;
  j["lambda_max"] = r.lambda_max;
  j["subsets_examined"] = r.subsets_examined;
  return j;
}

OrderedJson json_of(const ConditionReport& r) {
  OrderedJson j;
  j["K"] = r.sparsity_k;
  j["delta_measured"] = r.delta_measured;
  j["rows"] = OrderedJson::array();
  for (const auto& row : r.rows) {
    OrderedJson jr;
    jr["name"] = row.name;
    jr["threshold"] = row.threshold;
    jr["strict"] = row.strict;
    jr["sense"] = row.geq ? "geq" : "leq";
    jr["satisfied"] = row.satisfied;
    j["rows"].push_back(std::move(jr));
  }
  return j;
}

OrderedJson json_of(const WitnessReport& r) {
  OrderedJson j;
  j["K"] = r.sparsity_k;
  j["t"] = r.target_delta;
  j["shift"] = r.shift;
  j["eig_check"]["predicted"] = r.predicted_eigs;
  j["eig_check"]["computed"] = r.computed_eigs;
  j["eig_check"]["max_abs_diff"] = r.eig_max_abs_diff;
  j["ric_check"]["delta_computed"] = r.delta_computed;
  j["ric_check"]["t"] = r.target_delta;
  j["ric_check"]["abs_diff"] = r.delta_abs_diff;
  j["correlation_check"]["measured"] = r.first_correlations;
  j["correlation_check"]["predicted_on_support"] = r.predicted_on_support_corr;
  j["correlation_check"]["predicted_off_support"] = r.predicted_off_support_corr;
  j["correlation_check"]["max_abs_diff"] = r.corr_max_abs_diff;
  j["first_selected"] = r.first_selected;
  j["tie_detected"] = r.tie_detected;
  j["omp_failed"] = r.omp_failed;
  j["policy_used"] = r.policy_used;
  j["boundary_tie_case"] = r.boundary_tie_case;
  j["failed_clauses"] = r.failed_clauses;
  j["passed"] = r.failed_clauses.empty();
  return j;
}

OrderedJson json_of(const GapFinding& f) {
  OrderedJson j;
  j["trial"] = f.trial;
  j["generator"] = f.generator;
  j["digest"] = f.digest;
  j["delta"] = f.delta;
  j["matrix"] = json_of(f.matrix);
  j["signals_checked"] = f.signals_checked;
  j["failure_found"] = f.failure_found;
  if (f.failure_found) {
    j["failing_signal"] = json_of(f.failing_signal);
    j["failing_policy"] = f.failing_policy;
  }
  return j;
}

OrderedJson report_envelope(const std::string& command, OrderedJson config, OrderedJson results,
                            double wall_seconds) {
  OrderedJson j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  j["results"] = std::move(results);
  j["timing"]["wall_seconds"] = wall_seconds;
  return j;
}

std::string render_json(const OrderedJson& report) { return report.dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_num(double v) { return format_double17(v); }

}  // namespace riclab
