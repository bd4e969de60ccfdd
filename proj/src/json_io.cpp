#include "spectra/json_io.hpp"

#include "json.hpp"
#include "spectra/version.hpp"

namespace spectra {

namespace {

using Json = nlohmann::ordered_json;

Json spectrum_json(const SpectrumVector& s) {
  return Json{{"values", s.values}, {"reordered", s.reordered}, {"clamped", s.clamped}};
}

Json run_json(const RunRecord& r) {
  Json j;
  j["schema"] = kRunSchema;
  j["component"] = r.component_id;
  j["permutation"] = r.permutation;
  j["seeds"] = r.seeds;
  j["steps"] = r.steps;
  j["batches"] = r.batches;
  j["renorm_every"] = r.renorm_every;
  j["estimates"] = spectrum_json(r.estimates);
  j["stderrs"] = r.stderrs;
  j["partial_sum_stderrs"] = r.partial_sum_stderrs;
  j["theta1"] = r.theta1;
  j["teich_time"] = r.teich_time;
  j["restarts"] = r.restarts;
  j["wall_seconds"] = r.wall_seconds;
  j["version"] = r.version;
  if (!r.full_theta.empty()) j["full_theta"] = r.full_theta;
  return j;
}

Json w_json(const WSpectrum& w) {
  Json values = Json::array();
  for (size_t i = 0; i < w.values.size(); ++i)
    values.push_back(Json{{"value", w.values[i].str()},
                          {"exactness", w.is_bound[i] ? "upper_bound" : "exact"}});
  return values;
}

}  // namespace

std::string run_record_to_json(const RunRecord& record) {
  return run_json(record).dump(2) + "\n";
}

RunRecord run_record_from_json(const std::string& text) {
  Json j = Json::parse(text);
  if (j.value("schema", "") != kRunSchema)
    throw ParseError("unexpected run schema: " + j.value("schema", "(none)"));
  RunRecord r;
  r.component_id = j.value("component", "");
  r.permutation = j.at("permutation").get<std::string>();
  r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  r.steps = j.at("steps").get<std::int64_t>();
  r.batches = j.at("batches").get<int>();
  r.renorm_every = j.at("renorm_every").get<int>();
  r.estimates.values = j.at("estimates").at("values").get<std::vector<double>>();
  r.estimates.reordered = j.at("estimates").at("reordered").get<bool>();
  r.estimates.clamped = j.at("estimates").at("clamped").get<bool>();
  r.stderrs = j.at("stderrs").get<std::vector<double>>();
  r.partial_sum_stderrs = j.at("partial_sum_stderrs").get<std::vector<double>>();
  r.theta1 = j.value("theta1", 0.0);
  r.teich_time = j.value("teich_time", 0.0);
  r.restarts = j.value("restarts", 0);
  r.wall_seconds = j.value("wall_seconds", 0.0);
  r.version = j.value("version", "");
  if (j.contains("full_theta"))
    r.full_theta = j.at("full_theta").get<std::vector<double>>();
  return r;
}

std::string cover_report_to_json(const CoverReport& report, const WSpectrum* w,
                                 const WSplitResult* splits) {
  Json j;
  j["schema"] = "spectra.cover.v1";
  j["source"] = report.source.str();
  j["image"] = report.image.str();
  j["base_genus"] = report.base_genus;
  j["cover_genus"] = report.cover_genus;
  j["g_eff"] = report.g_eff;
  j["deficit"] = report.deficit.str();
  if (report.has_totals) {
    j["l_plus"] = report.l_plus.str();
    j["l_minus"] = report.l_minus.str();
  }
  if (w) j["w"] = w_json(*w);
  if (splits) {
    Json list = Json::array();
    for (const WSplit& s : splits->splits) {
      Json item;
      Json plus = Json::array(), minus = Json::array();
      for (const Rational& v : s.w_plus) plus.push_back(v.str());
      for (const Rational& v : s.w_minus) minus.push_back(v.str());
      item["w_plus"] = std::move(plus);
      item["w_minus"] = std::move(minus);
      list.push_back(std::move(item));
    }
    j["splits"] = std::move(list);
    j["ambiguous"] = splits->ambiguous;
  }
  return j.dump(2) + "\n";
}

std::string verdicts_to_json(const std::vector<Verdict>& verdicts) {
  Json j;
  j["schema"] = kReportSchema;
  j["toolkit"] = kToolkitVersion;
  Json list = Json::array();
  for (const Verdict& v : verdicts) {
    Json run = run_json(v.run);
    run.erase("wall_seconds");  // keep report bytes reproducible
    Json item;
    item["component"] = v.component_id;
    item["status"] = v.status;
    item["basis"] = v.basis;
    item["w"] = w_json(v.w);
    item["w_exact"] = v.w_exact;
    item["dominance_tol"] = v.dominance_tol;
    item["partial_form"] =
        v.partial_form == Dominance::dominates
            ? "dominates"
            : (v.partial_form == Dominance::fails_at ? "fails_at" : "sum_mismatch");
    item["partial_fail_index"] = v.partial_fail_index;
    item["tail_form_ok"] = v.tail_form_ok;
    item["forms_agree"] = v.forms_agree;
    item["sum_residual"] = v.sum_residual;
    item["sum_within_tol"] = v.sum_within_tol;
    item["zero_w_flag_ok"] = v.zero_w_flag_ok;
    if (v.kz_limit_bound) item["kz_limit_bound"] = v.kz_limit_bound->str();
    item["run"] = std::move(run);
    list.push_back(std::move(item));
  }
  j["verdicts"] = std::move(list);
  return j.dump(2) + "\n";
}

}  // namespace spectra
