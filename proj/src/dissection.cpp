#include "cfdissect/dissection.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cfdissect {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_digits(std::string_view s, std::string_view what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("expected decimal digits for " + std::string(what) + ", got '" +
                                std::string(s) + "'");
  }
  return BigInt(std::string(s));
}

BigInt parse_power(std::string_view s) {
  const auto caret = s.find('^');
  if (caret == std::string_view::npos) return parse_digits(s, "an integer");
  const BigInt base = parse_digits(trim(s.substr(0, caret)), "a power base");
  const BigInt exponent = parse_digits(trim(s.substr(caret + 1)), "an exponent");
  if (exponent > 100000) throw std::invalid_argument("exponent too large: " + exponent.str());
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::string growth_message(const GrowthCheck& check) {
  std::string msg = "growth check failed";
  if (!check.violations.empty()) {
    const auto& v = check.violations.front();
    msg += ": member " + v.member.str();
    msg += v.next ? " has nearest larger member " + v.next->str() + " outside the bound"
                  : " has no larger member within the bound";
  }
  return msg;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_power(trim(s.substr(0, slash)));
    const BigInt den = parse_power(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    const BigInt w = whole.empty() ? BigInt(0) : parse_digits(whole, "a decimal");
    const BigInt f = frac.empty() ? BigInt(0) : parse_digits(frac, "a decimal");
    return Rational(w * scale + f, scale);
  }
  return Rational(parse_power(s));
}

BigInt parse_length(std::string_view text) { return parse_power(trim(text)); }

void validate(const GrowthSpec& spec) {
  if (const auto* cg = std::get_if<ConstantGrowth>(&spec)) {
    if (cg->c0 < 1) throw std::invalid_argument("constant growth: c0 must be positive");
    if (cg->steps.empty()) throw std::invalid_argument("constant growth: K must be nonempty");
    for (const auto& k : cg->steps) {
      if (k < 1) throw std::invalid_argument("constant growth: steps must be positive");
    }
    return;
  }
  if (std::get<GeometricGrowth>(spec).c <= 1) {
    throw std::invalid_argument("geometric growth: c must exceed 1");
  }
}

// --- languages --------------------------------------------------------------

UnaryLanguage UnaryLanguage::from_lengths(std::vector<BigInt> lengths) {
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1) throw std::invalid_argument("lengths must be positive");
    if (i > 0 && lengths[i] <= lengths[i - 1]) {
      throw std::invalid_argument("lengths must be strictly increasing (at " + lengths[i].str() + ")");
    }
  }
  UnaryLanguage l;
  l.source_ = std::move(lengths);
  return l;
}

UnaryLanguage UnaryLanguage::generated(Generator kind) {
  UnaryLanguage l;
  l.source_ = kind;
  return l;
}

UnaryLanguage UnaryLanguage::builtin(std::string_view name) {
  if (name == "pow2") return generated(Generator::pow2);
  if (name == "pow3") return generated(Generator::pow3);
  if (name == "fib") return generated(Generator::fib);
  throw std::invalid_argument("unknown built-in language '" + std::string(name) +
                              "' (expected pow2, pow3 or fib)");
}

std::vector<BigInt> UnaryLanguage::members_up_to(const BigInt& cap) const {
  std::vector<BigInt> out;
  if (const auto* explicit_lengths = std::get_if<std::vector<BigInt>>(&source_)) {
    for (const auto& m : *explicit_lengths) {
      if (m > cap) break;
      out.push_back(m);
    }
    return out;
  }
  switch (std::get<Generator>(source_)) {
    case Generator::pow2:
    case Generator::pow3: {
      const int base = std::get<Generator>(source_) == Generator::pow2 ? 2 : 3;
      for (BigInt m = 1; m <= cap; m *= base) out.push_back(m);
      break;
    }
    case Generator::fib: {
      // Distinct Fibonacci values 1, 2, 3, 5, 8, ...
      BigInt a = 1;
      BigInt b = 2;
      while (a <= cap) {
        out.push_back(a);
        a = std::exchange(b, a + b);
      }
      break;
    }
  }
  return out;
}

std::string UnaryLanguage::name() const {
  if (std::holds_alternative<std::vector<BigInt>>(source_)) return "lengths";
  switch (std::get<Generator>(source_)) {
    case Generator::pow2:
      return "pow2";
    case Generator::pow3:
      return "pow3";
    case Generator::fib:
      return "fib";
  }
  return "?";
}

GrowthCheck check_growth(const UnaryLanguage& lang, const GrowthSpec& spec, const BigInt& cap) {
  validate(spec);
  const auto members = lang.members_up_to(cap);
  if (members.size() < 2) {
    throw PreconditionError("growth check needs at least two members up to the cap, found " +
                            std::to_string(members.size()));
  }
  GrowthCheck check;
  if (const auto* geo = std::get_if<GeometricGrowth>(&spec)) {
    const BigInt& num = boost::multiprecision::numerator(geo->c);
    const BigInt& den = boost::multiprecision::denominator(geo->c);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      ++check.checked;
      if (members[i + 1] * den > members[i] * num) {
        check.violations.push_back({members[i], members[i + 1]});
      }
    }
    check.unverified.push_back(members.back());
  } else {
    const auto& cg = std::get<ConstantGrowth>(spec);
    const std::set<BigInt> present(members.begin(), members.end());
    const BigInt max_step = *std::max_element(cg.steps.begin(), cg.steps.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& u = members[i];
      if (u < cg.c0) continue;
      const bool found = std::any_of(cg.steps.begin(), cg.steps.end(),
                                     [&](const BigInt& k) { return present.count(u + k) > 0; });
      if (found) {
        ++check.checked;
      } else if (u + max_step > cap) {
        check.unverified.push_back(u);
      } else {
        ++check.checked;
        std::optional<BigInt> next;
        if (i + 1 < members.size()) next = members[i + 1];
        check.violations.push_back({u, next});
      }
    }
  }
  check.ok = check.violations.empty();
  return check;
}

// --- dissectors -------------------------------------------------------------

unsigned alpha_for(const Rational& c) {
  if (c <= 1) throw std::invalid_argument("alpha_for: c must exceed 1");
  unsigned alpha = 1;
  for (BigInt power = 2; Rational(power) < c; power *= 2) ++alpha;
  return alpha;
}

ResidueDissector residue_dissector(std::uint64_t g) {
  if (g < 1) throw std::invalid_argument("residue_dissector: g must be at least 1");
  if (g > (std::uint64_t{1} << 62)) throw std::invalid_argument("residue_dissector: g too large");
  return ResidueDissector{g};
}

bool ThetaRegular::contains(std::string_view w) const noexcept {
  const std::size_t h = leading_run(w, 'x');
  return h < w.size() && w[h] == 'p' && base.accepts(h);
}

ThetaRegular lift_to_theta(const ResidueDissector& d) { return ThetaRegular{d}; }

bool image_membership(const BigInt& m, const ResidueDissector& d) {
  const auto heights = feasible_heights(m);
  return std::any_of(heights.begin(), heights.end(), [&](unsigned h) { return d.accepts(h); });
}

std::optional<Word> witness(const BigInt& m, const ResidueDissector& d) {
  for (unsigned h : feasible_heights(m)) {
    if (!d.accepts(h)) continue;
    if (m > (BigInt(1) << 24)) throw PreconditionError("witness: m too large to materialize");
    const std::size_t leaves = std::size_t{1} << h;
    const std::size_t wide = static_cast<std::size_t>(m) - leaves;
    PerfectTreeSpec spec{h, std::vector<LeafKind>(leaves, LeafKind::pzp)};
    std::fill(spec.leaves.end() - static_cast<std::ptrdiff_t>(wide), spec.leaves.end(),
              LeafKind::pzzp);
    return spec.serialize();
  }
  return std::nullopt;
}

// --- pipeline ---------------------------------------------------------------

GrowthCheckFailed::GrowthCheckFailed(GrowthCheck check)
    : std::runtime_error(growth_message(check)), check_(std::move(check)) {}

DissectionReport dissect_geometric(const UnaryLanguage& lang, const Rational& c, const BigInt& cap,
                                   std::size_t sample_limit) {
  GrowthCheck check = check_growth(lang, GeometricGrowth{c}, cap);
  if (!check.ok) throw GrowthCheckFailed(std::move(check));

  DissectionReport report;
  report.alpha = alpha_for(c);
  report.g = report.alpha + 1;
  report.cap = cap;
  report.growth_check = std::move(check);
  const auto d = residue_dissector(report.g);
  for (const auto& m : lang.members_up_to(cap)) {
    if (m < kSmallestPartitioned) {
      ++report.skipped_small;
      continue;
    }
    if (image_membership(m, d)) {
      if (report.samples_in.size() < sample_limit) report.samples_in.push_back(m);
      ++report.in_count;
    } else {
      if (report.samples_out.size() < sample_limit) report.samples_out.push_back(m);
      ++report.out_count;
    }
  }
  return report;
}

namespace {

nlohmann::json lengths_json(const std::vector<BigInt>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& m : v) arr.push_back(m.str());
  return arr;
}

std::vector<BigInt> lengths_from(const nlohmann::json& arr) {
  std::vector<BigInt> out;
  for (const auto& s : arr) out.push_back(parse_length(s.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json to_json(const DissectionReport& report) {
  auto violations = nlohmann::json::array();
  for (const auto& v : report.growth_check.violations) {
    violations.push_back({{"member", v.member.str()},
                          {"next", v.next ? nlohmann::json(v.next->str()) : nlohmann::json()}});
  }
  return {{"alpha", report.alpha},
          {"g", report.g},
          {"cap", report.cap.str()},
          {"in_count", report.in_count},
          {"out_count", report.out_count},
          {"skipped_small", report.skipped_small},
          {"samples_in", lengths_json(report.samples_in)},
          {"samples_out", lengths_json(report.samples_out)},
          {"growth_check",
           {{"ok", report.growth_check.ok},
            {"checked", report.growth_check.checked},
            {"violations", violations},
            {"unverified", lengths_json(report.growth_check.unverified)}}}};
}

DissectionReport report_from_json(const nlohmann::json& j) {
  DissectionReport r;
  r.alpha = j.at("alpha").get<unsigned>();
  r.g = j.at("g").get<std::uint64_t>();
  r.cap = parse_length(j.at("cap").get<std::string>());
  r.in_count = j.at("in_count").get<std::size_t>();
  r.out_count = j.at("out_count").get<std::size_t>();
  r.skipped_small = j.value("skipped_small", std::size_t{0});
  r.samples_in = lengths_from(j.at("samples_in"));
  r.samples_out = lengths_from(j.at("samples_out"));
  const auto& gc = j.at("growth_check");
  r.growth_check.ok = gc.at("ok").get<bool>();
  r.growth_check.checked = gc.value("checked", std::size_t{0});
  for (const auto& v : gc.at("violations")) {
    GrowthViolation violation{parse_length(v.at("member").get<std::string>()), std::nullopt};
    if (!v.at("next").is_null()) violation.next = parse_length(v.at("next").get<std::string>());
    r.growth_check.violations.push_back(std::move(violation));
  }
  if (gc.contains("unverified")) r.growth_check.unverified = lengths_from(gc.at("unverified"));
  return r;
}

}  // namespace cfdissect
