// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include "prda/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "prda/design.hpp"
#include "prda/effect_model.hpp"
#include "prda/interpret.hpp"
#include "prda/oracle.hpp"

namespace prda {

using nlohmann::json;

namespace {

std::string join_errors(const std::vector<FieldError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += e.field + ": " + e.message;
  }
  return out;
}

// Collects typed fields from a JSON object, remembering every problem.
class Reader {
 public:
  explicit Reader(const json& body) : body_(body) {
    if (!body_.is_object()) add("body", "request body must be a JSON object");
  }

  bool has(const std::string& key) const { return body_.is_object() && body_.contains(key); }

  std::optional<double> number(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) return fail<double>(key, "must be a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) return fail<double>(key, "must be finite");
    return x;
  }

  std::optional<double> effect(const std::string& key) {
    auto x = number(key);
    if (x && *x == 0.0) {
      return fail<double>(key, "the plausible effect size must be nonzero (Type M divides by it)");
    }
    return x;
  }

  std::optional<int> integer(const std::string& key, int min_value) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    std::optional<int> out = as_int(*v);
    if (!out) return fail<int>(key, "must be an integer");
    if (*out < min_value) return fail<int>(key, "must be at least " + std::to_string(min_value));
    return out;
  }

  std::optional<bool> boolean(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) return fail<bool>(key, "must be true or false");
    return v->get<bool>();
  }

  std::optional<std::string> string(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) return fail<std::string>(key, "must be a string");
    return v->get<std::string>();
  }

  std::optional<std::pair<double, double>> number_pair(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
      return fail<std::pair<double, double>>(key, "must be an array of two numbers");
    }
    return std::pair{(*v)[0].get<double>(), (*v)[1].get<double>()};
  }

  std::optional<std::pair<int, int>> int_pair(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (v->is_array() && v->size() == 2) {
      auto a = as_int((*v)[0]);
      auto b = as_int((*v)[1]);
      if (a && b) return std::pair{*a, *b};
    }
    return fail<std::pair<int, int>>(key, "must be an array of two integers");
  }

  std::optional<std::vector<int>> int_list(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_array()) return fail<std::vector<int>>(key, "must be an array of integers");
    std::vector<int> out;
    for (const auto& item : *v) {
      auto x = as_int(item);
      if (!x) return fail<std::vector<int>>(key, "must be an array of integers");
      out.push_back(*x);
    }
    return out;
  }

  std::optional<SampleSummary> summary(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_object()) return fail<SampleSummary>(key, "must be an object {n, mean, sd}");
    Reader inner(*v);
    auto n = inner.integer("n", 2);
    auto mean = inner.number("mean");
    auto sd = inner.number("sd");
    if (!n) inner.missing("n");
    if (!mean) inner.missing("mean");
    if (!sd) inner.missing("sd");
    inner.reject_unknown();
    for (const auto& e : inner.errors_) add(key + "." + e.field, e.message);
    if (!inner.errors_.empty()) return std::nullopt;
    return SampleSummary{*n, *mean, *sd};
  }

  std::optional<std::uint64_t> seed(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (v->is_number_unsigned()) return v->get<std::uint64_t>();
    if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v->get<std::int64_t>());
    }
    if (v->is_string()) {
      const std::string s = v->get<std::string>();
      if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos && s.size() <= 20) {
        try {
          return std::stoull(s);
        } catch (const std::exception&) {
        }
      }
    }
    return fail<std::uint64_t>(key, "must be a non-negative 64-bit integer");
  }

  void missing(const std::string& key) { add(key, "is required"); }

  void forbid(const std::string& key, const std::string& why) {
    if (has(key)) {
      seen_.insert(key);
      add(key, why);
    }
  }

  void add(std::string field, std::string message) {
    errors_.push_back({std::move(field), std::move(message)});
  }

  void reject_unknown() {
    if (!body_.is_object()) return;
    for (const auto& [key, _] : body_.items()) {
      if (!seen_.count(key)) add(key, "unknown field");
    }
  }

  // Runs a core validator and records what it rejects.
  template <typename F>
  void check(F&& f) {
    try {
      f();
    } catch (const InvalidParameter& e) {
      add(e.field(), e.detail());
    }
  }

  bool ok() const { return errors_.empty(); }

  void finish() {
    reject_unknown();
    if (!errors_.empty()) throw RequestError(errors_);
  }

 private:
  static std::optional<int> as_int(const json& v) {
    if (v.is_number_integer()) {
      const auto x = v.get<std::int64_t>();
      if (x >= std::numeric_limits<int>::min() && x <= std::numeric_limits<int>::max()) {
        return static_cast<int>(x);
      }
      return std::nullopt;
    }
    if (v.is_number_float()) {
      const double x = v.get<double>();
      if (std::floor(x) == x && std::fabs(x) <= 2e9) return static_cast<int>(x);
    }
    return std::nullopt;
  }

  const json* take(const std::string& key) {
    if (!has(key)) return nullptr;
    seen_.insert(key);
    const json& v = body_.at(key);
    return v.is_null() ? nullptr : &v;
  }

  template <typename T>
  std::optional<T> fail(const std::string& key, std::string message) {
    add(key, std::move(message));
    return std::nullopt;
  }

  const json& body_;
  std::vector<FieldError> errors_;
  std::set<std::string> seen_;
};

Mode read_mode(Reader& r) {
  const auto mode = r.string("mode");
  if (!mode || *mode == "simulate") return Mode::simulate;
  if (*mode == "exact") return Mode::exact;
  r.add("mode", "must be \"simulate\" or \"exact\"");
  return Mode::simulate;
}

// n for equal groups, or n1 with optional n2 (default n1).
void read_group_sizes(Reader& r, int& n1_out, int& n2_out) {
  const auto n = r.integer("n", 2);
  const auto n1 = r.integer("n1", 2);
  const auto n2 = r.integer("n2", 2);
  if (n && (n1 || n2)) {
    r.add("n", "give either n or n1/n2, not both");
  } else if (n) {
    n1_out = n2_out = *n;
  } else if (n1) {
    n1_out = *n1;
    n2_out = n2.value_or(*n1);
  } else if (n2 && !r.has("n1")) {
    r.missing("n1");
  } else if (!r.has("n") && !r.has("n1")) {
    r.missing("n");
  }
}

ProspectiveParams read_prospective(Reader& r) {
  ProspectiveParams p;
  r.forbid("n", "prospective analysis takes a target power, not n");
  if (auto d = r.effect("d")) p.d = *d; else if (!r.has("d")) r.missing("d");
  if (auto power = r.number("power")) p.power = *power; else if (!r.has("power")) r.missing("power");
  if (auto a = r.number("sigLevel")) p.sig_level = *a;
  if (auto b = r.integer("B", 1)) p.B = *b;
  if (auto range = r.int_pair("rangen")) p.rangen = {range->first, range->second};
  if (auto tol = r.number("tol")) p.tol = *tol;
  if (r.ok()) {
    r.check([&] {
      ProspectiveSpec spec{p.d, p.power, p.sig_level, p.rangen, p.tol, p.B};
      spec.validate();
    });
  }
  return p;
}

RetrospectiveParams read_retrospective(Reader& r) {
  RetrospectiveParams p;
  r.forbid("power", "retrospective analysis takes n, not a target power");
  if (auto d = r.effect("d")) p.d = *d; else if (!r.has("d")) r.missing("d");
  read_group_sizes(r, p.n1, p.n2);
  if (auto a = r.number("sigLevel")) p.sig_level = *a;
  if (auto b = r.integer("B", 1)) p.B = *b;
  if (r.ok()) {
    r.check([&] { DesignSpec{p.d, p.n1, p.n2, p.B, p.sig_level, p.d}.validate(); });
  }
  return p;
}

DesignEstParams read_design_est(Reader& r) {
  DesignEstParams p;
  read_group_sizes(r, p.n1, p.n2);
  p.target_d = r.number("targetD");
  p.limits = r.number_pair("limits");
  if (auto dist = r.string("distribution")) p.distribution = *dist;
  if (auto k = r.number("k")) p.k = *k;
  if (auto a = r.number("sigLevel")) p.sig_level = *a;
  if (auto b = r.integer("B", 1)) p.B = *b;
  if (auto b0 = r.integer("B0", 1)) p.B0 = *b0;
  if (auto rd = r.boolean("returnData")) p.return_data = *rd;
  if (r.ok()) {
    r.check([&] {
      PriorSpec ps;
      ps.target_d = p.target_d;
      if (p.limits) {
        ps.lower = p.limits->first;
        ps.upper = p.limits->second;
      }
      ps.distribution = p.distribution;
      ps.k = p.k;
      DesignEstSpec spec;
      spec.n1 = p.n1;
      spec.n2 = p.n2;
      spec.prior = build_prior(ps);
      spec.alpha = p.sig_level;
      spec.B = p.B;
      spec.B0 = p.B0;
      spec.validate();
    });
  }
  return p;
}

SensitivityParams read_sensitivity(Reader& r) {
  SensitivityParams p;
  if (auto d = r.effect("d")) p.d = *d; else if (!r.has("d")) r.missing("d");
  if (auto grid = r.int_list("nGrid")) p.n_grid = *grid; else if (!r.has("nGrid")) r.missing("nGrid");
  if (auto a = r.number("sigLevel")) p.sig_level = *a;
  if (auto b = r.integer("B", 1)) p.B = *b;
  if (r.ok()) {
    if (p.n_grid.empty()) r.add("nGrid", "grid must contain at least one n");
    for (int n : p.n_grid) {
      if (n < 2) {
        r.add("nGrid", "every n must be at least 2");
        break;
      }
    }
    r.check([&] { DesignSpec{p.d, 2, 2, p.B, p.sig_level, p.d}.validate(); });
  }
  return p;
}

InterpretParams read_interpret(Reader& r) {
  InterpretParams p;
  p.d = r.number("d");
  p.a = r.summary("a");
  p.b = r.summary("b");
  if (auto level = r.number("level")) p.level = *level;
  const bool groups = r.has("a") || r.has("b");
  if (groups && r.has("d")) r.add("d", "give either d or the two group summaries, not both");
  if (!groups && !r.has("d")) r.missing("d");
  if (groups && (!r.has("a") || !r.has("b"))) r.add(r.has("a") ? "b" : "a", "is required");
  if (!(p.level > 0.0 && p.level < 1.0)) r.add("level", "must lie in (0, 1)");
  if (r.ok() && p.a && p.b) {
    r.check([&] {
      p.a->validate("a");
      p.b->validate("b");
    });
  }
  return p;
}

json design_json(const DesignResult& r, bool simulated) {
  json out;
  out["power"] = r.power;
  out["typeS"] = r.type_s;
  out["typeM"] = r.type_m ? json(*r.type_m) : json(nullptr);
  if (simulated) out["nSignificant"] = r.n_significant;
  return out;
}

json prior_json(const EffectPrior& prior) {
  json out;
  out["distribution"] = std::string(to_string(prior.kind()));
  if (prior.is_interval()) {
    out["limits"] = {prior.lower(), prior.upper()};
    out["center"] = prior.center();
    if (prior.kind() == PriorKind::truncated_normal) {
      out["k"] = prior.k();
      out["sd"] = prior.sigma();
    }
  } else {
    out["targetD"] = prior.value();
  }
  return out;
}

EffectPrior prior_of(const DesignEstParams& p) {
  PriorSpec ps;
  ps.target_d = p.target_d;
  if (p.limits) {
    ps.lower = p.limits->first;
    ps.upper = p.limits->second;
  }
  ps.distribution = p.distribution;
  ps.k = p.k;
  return build_prior(ps);
}

json run_prospective(const ProspectiveParams& p, Mode mode, std::uint64_t seed,
                     const ExecutionPolicy& policy) {
  const ProspectiveResult r =
      mode == Mode::exact
          ? exact_sample_size(p.d, p.power, p.sig_level, p.rangen)
          : find_sample_size({p.d, p.power, p.sig_level, p.rangen, p.tol, p.B}, seed, policy);
  json out = design_json(r.achieved, mode == Mode::simulate);
  out["d"] = p.d;
  out["n"] = r.n_per_group;
  out["targetPower"] = p.power;
  out["probes"] = r.probes;
  return out;
}

json run_retrospective(const RetrospectiveParams& p, Mode mode, std::uint64_t seed,
                       const ExecutionPolicy& policy) {
  const DesignResult r = mode == Mode::exact
                             ? exact_design(p.d, p.n1, p.n2, p.sig_level)
                             : retrospective(p.d, p.n1, p.n2, p.sig_level, p.B, seed, policy);
  json out = design_json(r, mode == Mode::simulate);
  out["d"] = p.d;
  out["n1"] = p.n1;
  out["n2"] = p.n2;
  return out;
}

json run_design_est(const DesignEstParams& p, Mode mode, std::uint64_t seed,
                    const ExecutionPolicy& policy) {
  const EffectPrior prior = prior_of(p);
  json out;
  out["n1"] = p.n1;
  out["n2"] = p.n2;
  out["prior"] = prior_json(prior);
  if (mode == Mode::exact) {
    const DesignResult r = exact_design(prior.value(), p.n1, p.n2, p.sig_level);
    out.update(design_json(r, false));
    return out;
  }
  DesignEstSpec spec;
  spec.n1 = p.n1;
  spec.n2 = p.n2;
  spec.prior = prior;
  spec.alpha = p.sig_level;
  spec.B = p.B;
  spec.B0 = p.B0;
  spec.return_data = p.return_data;
  const DesignEstResult r = design_est(spec, seed, policy);
  out["power"] = r.power;
  out["typeS"] = r.type_s;
  out["typeM"] = r.type_m ? json(*r.type_m) : json(nullptr);
  out["undefinedTypeM"] = r.undefined_type_m;
  if (r.per_draw) {
    json rows = json::array();
    for (const PriorDraw& row : *r.per_draw) {
      rows.push_back({{"d", row.d},
                      {"power", row.power},
                      {"typeS", row.type_s},
                      {"typeM", row.type_m ? json(*row.type_m) : json(nullptr)}});
    }
    out["data"] = std::move(rows);
  }
  return out;
}

json run_sensitivity(const SensitivityParams& p, Mode mode, std::uint64_t seed,
                     const ExecutionPolicy& policy) {
  json rows = json::array();
  if (mode == Mode::exact) {
    for (int n : p.n_grid) {
      json row = design_json(exact_design(p.d, n, n, p.sig_level), false);
      row["n"] = n;
      rows.push_back(std::move(row));
    }
  } else {
    for (const auto& point : sensitivity_curve(p.d, p.n_grid, p.sig_level, p.B, seed, policy)) {
      json row = design_json(point.result, true);
      row["n"] = point.n;
      rows.push_back(std::move(row));
    }
  }
  return {{"d", p.d}, {"rows", std::move(rows)}};
}

json run_interpret(const InterpretParams& p) {
  json out;
  EffectInterpretation e;
  if (p.a && p.b) {
    e = interpret_from_summaries(*p.a, *p.b, p.level);
    const TTestOutcome t = two_sample_t(*p.a, *p.b, 0.05);
    out["pooledSd"] = pooled_sd(*p.a, *p.b);
    out["t"] = t.t;
    out["df"] = t.df;
    out["p"] = t.p_value;
    out["ciLow"] = e.ci_low;
    out["ciHigh"] = e.ci_high;
    out["level"] = e.level;
  } else {
    e = interpret_effect(*p.d);
  }
  out["d"] = e.d;
  out["cl"] = e.cl;
  out["u3"] = e.u3;
  out["label"] = std::string(to_string(e.label));
  return out;
}

// ---- rendering -------------------------------------------------------------

std::string fmt(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string fmt_json_number(const json& v, int decimals) {
  return v.is_null() ? std::string("NA") : fmt(v.get<double>(), decimals);
}

std::string csv_number(const json& v) {
  if (v.is_null()) return "NA";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
  return buf;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << std::string(width[c] + 2 - row[c].size(), ' ') << row[c];
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string footer(const ScenarioReport& rep) {
  const json req = request_to_json(rep.request);
  std::ostringstream os;
  os << "\nsig.level = " << csv_number(req.value("sigLevel", json(0.05)));
  if (rep.request.mode == Mode::exact) {
    os << ", mode = exact (noncentral t)";
  } else {
    if (req.contains("B")) os << ", B = " << req["B"].dump();
    if (req.contains("B0")) os << ", B0 = " << req["B0"].dump();
    os << ", seed = " << *rep.request.seed;
  }
  os << '\n';
  return os.str();
}

std::string render_human(const ScenarioReport& rep) {
  const json& r = rep.result;
  std::ostringstream os;
  switch (rep.request.command) {
    case Command::prospective: {
      Table t({"d", "power", "n", "typeS", "typeM"});
      t.add({fmt(r["d"].get<double>(), 2), fmt(r["power"].get<double>(), 3),
             std::to_string(r["n"].get<int>()), fmt(r["typeS"].get<double>(), 4),
             fmt_json_number(r["typeM"], 3)});
      os << t.str();
      os << "\ntarget power = " << fmt(r["targetPower"].get<double>(), 3)
         << ", n per group (total " << 2 * r["n"].get<int>() << ")";
      break;
    }
    case Command::retrospective: {
      const bool equal = r["n1"] == r["n2"];
      Table t(equal ? std::vector<std::string>{"d", "n", "power", "typeS", "typeM"}
                    : std::vector<std::string>{"d", "n1", "n2", "power", "typeS", "typeM"});
      std::vector<std::string> row{fmt(r["d"].get<double>(), 2), r["n1"].dump()};
      if (!equal) row.push_back(r["n2"].dump());
      row.push_back(fmt(r["power"].get<double>(), 3));
      row.push_back(fmt(r["typeS"].get<double>(), 4));
      row.push_back(fmt_json_number(r["typeM"], 3));
      t.add(std::move(row));
      os << t.str();
      break;
    }
    case Command::design_est: {
      Table t({"power", "typeS", "typeM"});
      t.add({fmt(r["power"].get<double>(), 3), fmt(r["typeS"].get<double>(), 4),
             fmt_json_number(r["typeM"], 3)});
      os << t.str();
      const json& prior = r["prior"];
      os << "\nn1 = " << r["n1"].dump() << ", n2 = " << r["n2"].dump() << ", effect: ";
      if (prior.contains("limits")) {
        os << prior["distribution"].get<std::string>() << " on ["
           << csv_number(prior["limits"][0]) << ", " << csv_number(prior["limits"][1])
           << "], Type M relative to " << csv_number(prior["center"]);
        if (prior.contains("sd")) os << ", sd = " << fmt(prior["sd"].get<double>(), 4);
      } else {
        os << "d = " << csv_number(prior["targetD"]);
      }
      if (r.contains("undefinedTypeM") && r["undefinedTypeM"].get<int>() > 0) {
        os << "\n" << r["undefinedTypeM"].get<int>()
           << " draws had no significant replicate and are left out of typeM";
      }
      break;
    }
    case Command::sensitivity: {
      Table t({"n", "power", "typeS", "typeM"});
      for (const auto& row : r["rows"]) {
        t.add({row["n"].dump(), fmt(row["power"].get<double>(), 3),
               fmt(row["typeS"].get<double>(), 4), fmt_json_number(row["typeM"], 3)});
      }
      os << "d = " << csv_number(r["d"]) << "\n" << t.str();
      break;
    }
    case Command::interpret: {
      os << "Cohen's d = " << fmt(r["d"].get<double>(), 3);
      if (r.contains("ciLow")) {
        os << " (" << fmt(r["level"].get<double>() * 100.0, 0) << "% CI "
           << fmt(r["ciLow"].get<double>(), 2) << " to " << fmt(r["ciHigh"].get<double>(), 2)
           << ")\npooled sd = " << fmt(r["pooledSd"].get<double>(), 3)
           << ", t(" << r["df"].dump() << ") = " << fmt(r["t"].get<double>(), 3)
           << ", p = " << fmt(r["p"].get<double>(), 4);
      }
      os << "\nCL = " << fmt(r["cl"].get<double>(), 3) << ", U3 = " << fmt(r["u3"].get<double>(), 3)
         << "\nconventional label: " << r["label"].get<std::string>()
         << " (Cohen's benchmarks .2/.5/.8 are relative to the research area)\n";
      return os.str();
    }
  }
  os << footer(rep);
  return os.str();
}

std::string render_csv(const ScenarioReport& rep) {
  const json& r = rep.result;
  std::ostringstream os;
  switch (rep.request.command) {
    case Command::prospective:
      os << "d,target_power,n,power,type_s,type_m\n"
         << csv_number(r["d"]) << ',' << csv_number(r["targetPower"]) << ',' << r["n"].dump()
         << ',' << csv_number(r["power"]) << ',' << csv_number(r["typeS"]) << ','
         << csv_number(r["typeM"]) << '\n';
      break;
    case Command::retrospective:
      os << "d,n1,n2,power,type_s,type_m\n"
         << csv_number(r["d"]) << ',' << r["n1"].dump() << ',' << r["n2"].dump() << ','
         << csv_number(r["power"]) << ',' << csv_number(r["typeS"]) << ','
         << csv_number(r["typeM"]) << '\n';
      break;
    case Command::design_est:
      if (r.contains("data")) {
        os << "d_drawn,power,type_s,type_m\n";
        for (const auto& row : r["data"]) {
          os << csv_number(row["d"]) << ',' << csv_number(row["power"]) << ','
             << csv_number(row["typeS"]) << ',' << csv_number(row["typeM"]) << '\n';
        }
      } else {
        os << "power,type_s,type_m\n"
           << csv_number(r["power"]) << ',' << csv_number(r["typeS"]) << ','
           << csv_number(r["typeM"]) << '\n';
      }
      break;
    case Command::sensitivity:
      os << "n,power,type_s,type_m\n";
      for (const auto& row : r["rows"]) {
        os << row["n"].dump() << ',' << csv_number(row["power"]) << ','
           << csv_number(row["typeS"]) << ',' << csv_number(row["typeM"]) << '\n';
      }
      break;
    case Command::interpret:
      os << "d,ci_low,ci_high,cl,u3,label\n"
         << csv_number(r["d"]) << ',' << csv_number(r.value("ciLow", r["d"])) << ','
         << csv_number(r.value("ciHigh", r["d"])) << ',' << csv_number(r["cl"]) << ','
         << csv_number(r["u3"]) << ',' << r["label"].get<std::string>() << '\n';
      break;
  }
  return os.str();
}

}  // namespace

RequestError::RequestError(std::vector<FieldError> errors)
    : InvalidParameter(errors.empty() ? std::string("body") : errors.front().field,
                       errors.empty() ? std::string() : errors.front().message,
                       join_errors(errors)),
      errors_(std::move(errors)) {}

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::prospective: return "prospective";
    case Command::retrospective: return "retrospective";
    case Command::design_est: return "design-est";
    case Command::sensitivity: return "sensitivity";
    case Command::interpret: return "interpret";
  }
  return "retrospective";
}

std::string_view to_string(Mode m) noexcept { return m == Mode::exact ? "exact" : "simulate"; }

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (Command c : {Command::prospective, Command::retrospective, Command::design_est,
                    Command::sensitivity, Command::interpret}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

ScenarioRequest parse_request(Command command, const json& body) {
  Reader r(body);
  ScenarioRequest req;
  req.command = command;
  if (command == Command::interpret) {
    req.mode = Mode::exact;
    r.forbid("mode", "interpret is deterministic and takes no mode");
    r.forbid("seed", "interpret is deterministic and takes no seed");
    req.params = read_interpret(r);
    r.finish();
    return req;
  }
  req.mode = read_mode(r);
  req.seed = r.seed("seed");
  switch (command) {
    case Command::prospective: req.params = read_prospective(r); break;
    case Command::retrospective: req.params = read_retrospective(r); break;
    case Command::design_est: {
      auto p = read_design_est(r);
      if (req.mode == Mode::exact && !p.target_d && r.ok()) {
        r.add("mode", "exact mode is available for a point effect (targetD) only");
      }
      req.params = std::move(p);
      break;
    }
    case Command::sensitivity: req.params = read_sensitivity(r); break;
    case Command::interpret: break;
  }
  r.finish();
  if (req.mode == Mode::exact) req.seed.reset();
  return req;
}

json request_to_json(const ScenarioRequest& request) {
  json out = json::object();
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ProspectiveParams>) {
          out = {{"d", p.d},         {"power", p.power},
                 {"sigLevel", p.sig_level},
                 {"rangen", {p.rangen.lower, p.rangen.upper}}};
          if (request.mode == Mode::simulate) {
            out["B"] = p.B;
            out["tol"] = p.tol;
          }
        } else if constexpr (std::is_same_v<P, RetrospectiveParams>) {
          out = {{"d", p.d}, {"n1", p.n1}, {"n2", p.n2}, {"sigLevel", p.sig_level}};
          if (request.mode == Mode::simulate) out["B"] = p.B;
        } else if constexpr (std::is_same_v<P, DesignEstParams>) {
          out = {{"n1", p.n1}, {"n2", p.n2}, {"sigLevel", p.sig_level}};
          if (p.target_d) {
            out["targetD"] = *p.target_d;
          } else if (p.limits) {
            out["limits"] = {p.limits->first, p.limits->second};
            out["distribution"] = p.distribution;
            if (p.distribution == "normal") out["k"] = p.k;
          }
          if (request.mode == Mode::simulate) {
            out["B"] = p.B;
            out["B0"] = p.B0;
            out["returnData"] = p.return_data;
          }
        } else if constexpr (std::is_same_v<P, SensitivityParams>) {
          out = {{"d", p.d}, {"nGrid", p.n_grid}, {"sigLevel", p.sig_level}};
          if (request.mode == Mode::simulate) out["B"] = p.B;
        } else {
          if (p.a && p.b) {
            out["a"] = {{"n", p.a->n}, {"mean", p.a->mean}, {"sd", p.a->sd}};
            out["b"] = {{"n", p.b->n}, {"mean", p.b->mean}, {"sd", p.b->sd}};
            out["level"] = p.level;
          } else if (p.d) {
            out["d"] = *p.d;
          }
        }
      },
      request.params);
  if (request.command != Command::interpret) {
    out["mode"] = std::string(to_string(request.mode));
    if (request.seed) out["seed"] = *request.seed;
  }
  return out;
}

std::uint64_t draw_seed() {
  std::random_device rd;
  const std::uint64_t hi = rd();
  const std::uint64_t lo = rd();
  return ((hi << 32) | lo) & ((std::uint64_t{1} << 53) - 1);
}

ScenarioReport run_scenario(ScenarioRequest request, const ExecutionPolicy& policy) {
  if (request.command == Command::interpret || request.mode == Mode::exact) {
    request.seed.reset();
  } else if (!request.seed) {
    request.seed = draw_seed();
  }
  const std::uint64_t seed = request.seed.value_or(0);
  ScenarioReport report{request, json::object()};
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ProspectiveParams>) {
          report.result = run_prospective(p, request.mode, seed, policy);
        } else if constexpr (std::is_same_v<P, RetrospectiveParams>) {
          report.result = run_retrospective(p, request.mode, seed, policy);
        } else if constexpr (std::is_same_v<P, DesignEstParams>) {
          report.result = run_design_est(p, request.mode, seed, policy);
        } else if constexpr (std::is_same_v<P, SensitivityParams>) {
          report.result = run_sensitivity(p, request.mode, seed, policy);
        } else {
          report.result = run_interpret(p);
        }
      },
      request.params);
  return report;
}

json report_to_json(const ScenarioReport& report) {
  json out;
  out["command"] = std::string(to_string(report.request.command));
  if (report.request.command != Command::interpret) {
    out["mode"] = std::string(to_string(report.request.mode));
    if (report.request.seed) out["seed"] = *report.request.seed;
  }
  out["request"] = request_to_json(report.request);
  out["result"] = report.result;
  return out;
}

std::string render(const ScenarioReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report_to_json(report).dump(2) + "\n";
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::human: return render_human(report);
  }
  return {};
}

double simulation_cost(const ScenarioRequest& request) {
  if (request.mode == Mode::exact) return 0.0;
  return std::visit(
      [](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ProspectiveParams>) {
          return static_cast<double>(p.B) * std::ceil(std::log2(p.rangen.upper - p.rangen.lower + 1.0) + 2.0);
        } else if constexpr (std::is_same_v<P, RetrospectiveParams>) {
          return p.B;
        } else if constexpr (std::is_same_v<P, DesignEstParams>) {
          return p.limits ? static_cast<double>(p.B) * p.B0 : p.B;
        } else if constexpr (std::is_same_v<P, SensitivityParams>) {
          return static_cast<double>(p.B) * p.n_grid.size();
        } else {
          return 0.0;
        }
      },
      request.params);
}

}  // namespace prda
