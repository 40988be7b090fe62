#include "frobwedge/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "frobwedge/errors.hpp"
#include "frobwedge/local_checks.hpp"

namespace frobwedge::report {

Format parse_format(std::string_view name) {
  if (name == "document") return Format::document;
  if (name == "summary") return Format::summary;
  if (name == "rows") return Format::rows;
  throw PreconditionError("unknown format '" + std::string(name) +
                          "' (expected rows, summary or document)");
}

void ReportDocument::add_failure(std::string check, std::string detail, Json where) {
  Json f = Json::object();
  f["check"] = std::move(check);
  f["detail"] = std::move(detail);
  if (!where.is_null()) f["where"] = std::move(where);
  failures.push_back(std::move(f));
}

Json ReportDocument::to_json() const {
  Json doc = Json::object();
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["results"] = results;
  doc["failures"] = failures;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

Json ReportDocument::summary() const {
  Json doc = Json::object();
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["result_count"] = results.size();
  doc["failure_count"] = failures.size();
  doc["failures"] = failures;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string text;
  if (v.is_null()) return "";
  if (v.is_string()) {
    text = v.get<std::string>();
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string ReportDocument::to_rows() const {
  std::vector<std::string> columns;
  for (const auto& row : results) {
    for (const auto& item : row.items()) {
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) {
        columns.push_back(item.key());
      }
    }
  }
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << " command=" << command << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << "\n";
  for (const auto& row : results) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "");
      if (row.contains(columns[c])) out << csv_cell(row.at(columns[c]));
    }
    out << "\n";
  }
  return out.str();
}

std::string ReportDocument::render(Format format) const {
  switch (format) {
    case Format::document:
      return to_json().dump(2) + "\n";
    case Format::summary:
      return summary().dump(2) + "\n";
    case Format::rows:
      return to_rows();
  }
  throw ContractViolation("unhandled format");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------

namespace {

Json class_json(const BundleClass& b) {
  Json j = Json::object();
  j["rank"] = to_string(b.rank());
  j["degree"] = to_string(b.degree());
  j["slope"] = to_string(slope(b));
  return j;
}

Json point_json(const GridPoint& pt) {
  Json j = Json::object();
  j["p"] = pt.p;
  j["n"] = pt.n;
  j["r"] = pt.r;
  j["g"] = pt.g;
  j["d"] = pt.d;
  return j;
}

}  // namespace

ReportDocument cmd_verify_local(const VerifyLocalOptions& opts) {
  if (opts.p > opts.max_p) {
    throw PreconditionError("p=" + std::to_string(opts.p) + " exceeds maximum " +
                            std::to_string(opts.max_p));
  }
  const PrimeChar p(opts.p);
  if (opts.rank < 1) throw PreconditionError("rank must be at least 1");
  if (opts.trunc < 2) throw PreconditionError("truncation order must be at least 2");

  ReportDocument doc;
  doc.command = "verify-local";
  doc.parameters["p"] = opts.p;
  doc.parameters["r"] = opts.rank;
  doc.parameters["trunc"] = opts.trunc;
  doc.parameters["seed"] = opts.seed;

  const auto suite = local::run_local_suite(p, opts.rank, opts.trunc, opts.seed, Exec::parallel);
  for (const auto& c : suite.checks) {
    Json row = Json::object();
    row["kind"] = "check";
    row["check"] = c.name;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    doc.results.push_back(std::move(row));
    if (!c.passed) doc.add_failure(c.name, c.detail);
  }
  for (const auto& s : suite.symmetry.rows) {
    Json row = Json::object();
    row["kind"] = "symmetry";
    row["k"] = s.k;
    row["top_symmetric"] = s.top_symmetric;
    row["top_identity_holds"] = s.top_identity_holds;
    row["next_symmetric"] = s.next_symmetric;
    row["next_identity_holds"] = s.next_identity_holds;
    doc.results.push_back(std::move(row));
  }
  if (suite.wedge) {
    const auto& w = *suite.wedge;
    Json row = Json::object();
    row["kind"] = "wedge_kernel";
    row["generator_count"] = w.generator_count;
    row["generators_free"] = w.generators_free;
    row["swap_is_permutation"] = w.swap_is_permutation;
    row["symmetric_rank"] = w.symmetric_rank;
    row["symmetric_count"] = w.symmetric_count;
    row["symmetric_invariant"] = w.symmetric_invariant;
    row["symmetric_independent"] = w.symmetric_independent;
    row["complement_count"] = w.complement_count;
    row["complement_independent"] = w.complement_independent;
    row["antisymmetrized_applicable"] = w.antisymmetrized_applicable;
    row["antisymmetrized_independent"] = w.antisymmetrized_independent;
    doc.results.push_back(std::move(row));
  }
  return doc;
}

ReportDocument cmd_slopes(const SlopesOptions& opts) {
  const PrimeChar p(opts.p);
  if (opts.g < 2) throw PreconditionError("genus must be at least 2");
  if (opts.n < 1) throw PreconditionError("n must be at least 1");
  if (opts.rank < 1) throw PreconditionError("rank must be at least 1");
  const CurveContext ctx(p, opts.g);
  const BundleClass e(opts.rank, opts.degree);

  ReportDocument doc;
  doc.command = "slopes";
  doc.parameters["p"] = opts.p;
  doc.parameters["g"] = opts.g;
  doc.parameters["n"] = opts.n;
  doc.parameters["r"] = opts.rank;
  doc.parameters["d"] = opts.degree;

  const auto v = verdict(e, opts.n, ctx);
  const bool expected = expected_destabilized(e.rank(), opts.p, opts.n);
  const Rational closed = closed_form_gap(v.case_tag, opts.p, opts.n, opts.g);

  Json row = Json::object();
  row["bundle"] = class_json(e);
  row["pushforward"] = class_json(frob_push(e, opts.n, ctx));
  row["ambient"] = class_json(v.ambient);
  row["sub"] = class_json(v.sub);
  row["case"] = to_string(v.case_tag);
  row["gap"] = to_string(v.gap);
  row["closed_form_gap"] = to_string(closed);
  row["destabilized"] = v.destabilized;
  row["expected"] = expected;
  if (v.previous_level) {
    Json prev = Json::object();
    prev["ambient"] = class_json(v.previous_level->ambient);
    prev["gap"] = to_string(v.previous_level->gap);
    row["previous_level"] = std::move(prev);
  }
  doc.results.push_back(std::move(row));

  if (v.gap != closed) {
    doc.add_failure("closed_form", "gap " + to_string(v.gap) + " != " + to_string(closed));
  }
  if (v.destabilized != expected) {
    doc.add_failure("predicate", "verdict disagrees with r > 1 or p^n > 3");
  }
  return doc;
}

ReportDocument cmd_sweep(const SweepBounds& bounds) {
  const SweepReport rep = theorem_sweep(bounds);

  ReportDocument doc;
  doc.command = "sweep";
  doc.parameters["pmax"] = bounds.pmax;
  doc.parameters["nmax"] = bounds.nmax;
  doc.parameters["rmax"] = bounds.rmax;
  doc.parameters["gmax"] = bounds.gmax;
  doc.parameters["dmax"] = bounds.dmax;

  std::size_t f = 0;
  for (const auto& row : rep.rows) {
    std::string failed;
    while (f < rep.failures.size() && rep.failures[f].point == row.point) {
      failed += (failed.empty() ? "" : ";") + rep.failures[f].check;
      ++f;
    }
    Json j = point_json(row.point);
    j["case"] = to_string(row.verdict.case_tag);
    j["sub_rank"] = to_string(row.verdict.sub.rank());
    j["sub_degree"] = to_string(row.verdict.sub.degree());
    j["ambient_rank"] = to_string(row.verdict.ambient.rank());
    j["ambient_degree"] = to_string(row.verdict.ambient.degree());
    j["gap"] = to_string(row.verdict.gap);
    j["destabilized"] = row.verdict.destabilized;
    j["expected"] = row.expected;
    j["canonical_conserved"] = row.canonical_conserved;
    j["tensor_conserved"] = row.tensor_conserved;
    j["failed_checks"] = failed;
    doc.results.push_back(std::move(j));
  }
  for (const auto& fail : rep.failures) doc.add_failure(fail.check, fail.detail, point_json(fail.point));
  return doc;
}

ReportDocument cmd_cohom_cert(const CohomOptions& opts) {
  const PrimeChar p(opts.p);
  if (opts.g < 2) throw PreconditionError("genus must be at least 2");
  if (opts.n < 2) {
    throw PreconditionError("n must be > 1: the certificate is built on F_*^n L with n > 1");
  }
  const CurveContext ctx(p, opts.g);
  const CohomCertificate c = cohom_certificate(ctx, opts.n);

  ReportDocument doc;
  doc.command = "cohom-cert";
  doc.parameters["p"] = opts.p;
  doc.parameters["g"] = opts.g;
  doc.parameters["n"] = opts.n;

  Json row = Json::object();
  row["d"] = to_string(c.chosen_degree);
  row["modulus"] = to_string(c.modulus);
  row["degA"] = to_string(c.degA);
  row["t"] = c.t;
  row["threshold"] = to_string(c.threshold);
  row["divisibility_ok"] = c.divisibility_ok;
  row["degree_ok"] = c.degree_ok;
  row["witness_twist_degree"] = to_string(c.witness_twist_degree);
  row["valid"] = c.valid;
  doc.results.push_back(std::move(row));

  if (!c.divisibility_ok) doc.add_failure("divisibility", "modulus does not divide");
  if (!c.degree_ok) doc.add_failure("degree", "deg A below threshold");
  if (c.witness_twist_degree != 0) {
    doc.add_failure("witness", "twist degree " + to_string(c.witness_twist_degree));
  }
  return doc;
}

}  // namespace frobwedge::report
