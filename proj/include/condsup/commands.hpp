#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "condsup/conditional.hpp"
#include "condsup/ergodic.hpp"
#include "condsup/errors.hpp"
#include "condsup/market.hpp"
#include "condsup/norms.hpp"
#include "condsup/scenario.hpp"
#include "condsup/superhedge.hpp"

namespace condsup::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,          ///< command ran and the checked condition holds
    kConditionFails = 1,   ///< the checked condition fails
    kParseError = 2,       ///< unreadable input: JSON, rationals, arguments
    kValidationError = 3,  ///< well-formed input that violates an invariant
};

enum class Format { text, json };

enum class CheckKind { aip, na };

struct CondopsOptions {
    std::string vector;
    std::size_t time = 0;
    unsigned long p_max = 4096;
    Format format = Format::text;
};

struct PriceOptions {
    std::string claim;
    std::size_t time = 0;
    Rational eps = Rational(1, 1000);
    Format format = Format::text;
};

struct ErgodicOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    Format format = Format::text;
};

namespace detail {

inline std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

inline std::string fmt_doubles(const std::vector<double>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += fmt_double(xs[i]);
    }
    return out + ")";
}

inline Json atoms_json(const Partition& p) {
    Json out = Json::array();
    for (const auto& a : p.atoms()) out.push_back(condsup::detail::atom_json(a));
    return out;
}

inline Json strategy_json(const Strategy& s, const MarketModel& m) {
    Json out = Json::array();
    for (std::size_t t = s.start(); t < s.start() + s.steps(); ++t) {
        Json step = Json::array();
        for (const auto& atom : m.partition(t).atoms())
            step.push_back({{"time", t},
                            {"atom", condsup::detail::atom_json(atom)},
                            {"theta", to_string(s.holding(t)[atom.front()])}});
        out.push_back({{"time", t}, {"holdings", std::move(step)}});
    }
    return out;
}

inline void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Conditional operators of one named vector at the partition of `time`.
inline int run_condops(const Scenario& s, const CondopsOptions& opt, std::ostream& out) {
    const Vector* found = s.find_vector(opt.vector);
    if (!found) throw ValidationError("no vector named \"" + opt.vector + "\" in the vectors section");
    const Filtration& flt = s.require_filtration();
    if (opt.time > flt.horizon())
        throw ValidationError("time " + std::to_string(opt.time) + " is past the filtration horizon " +
                              std::to_string(flt.horizon()));
    const Vector& f = *found;
    const ConditionalSystem sys = flt.system(opt.time);
    const Vector expectation = cond_expectation(f, sys);
    const Vector upper = cond_sup(f, sys);
    const Vector lower = cond_inf(f, sys);
    const Vector spread = delta(f, sys);
    const RangeProjection nearest = nearest_in_range(f, sys);
    const LpLimitReport lp = lp_limit_estimate(abs(f), sys, opt.p_max);

    if (opt.format == Format::json) {
        using condsup::detail::vector_json;
        Json steps = Json::array();
        for (const auto& st : lp.steps) steps.push_back({{"p", st.p}, {"gap", st.gap}, {"norm", st.norm}});
        detail::write_json(out, {{"command", "condops"},
                                 {"vector", opt.vector},
                                 {"time", opt.time},
                                 {"atoms", detail::atoms_json(sys.partition())},
                                 {"values", vector_json(f)},
                                 {"expectation", vector_json(expectation)},
                                 {"sup", vector_json(upper)},
                                 {"inf", vector_json(lower)},
                                 {"delta", vector_json(spread)},
                                 {"nearest", vector_json(nearest.point)},
                                 {"distance", vector_json(nearest.distance)},
                                 {"in_range", sys.in_range(f)},
                                 {"lp_limit",
                                  {{"p_max", opt.p_max}, {"monotone", lp.monotone}, {"steps", std::move(steps)}}}});
        return kSuccess;
    }

    out << "condops: vector " << opt.vector << " at time " << opt.time << "\n";
    out << "atoms: " << to_string(sys.partition()) << "\n";
    const std::vector<std::pair<std::string, const Vector*>> columns = {
        {"f", &f},          {"F(f)", &expectation}, {"M_F(f)", &upper},          {"m_F(f)", &lower},
        {"delta", &spread}, {"nearest", &nearest.point}, {"distance", &nearest.distance}};
    out << std::left << std::setw(8) << "outcome";
    for (const auto& [name, _] : columns) out << std::setw(10) << name;
    out << "\n";
    for (std::size_t w = 0; w < f.size(); ++w) {
        out << std::setw(8) << w;
        for (const auto& [_, v] : columns) out << std::setw(10) << to_string((*v)[w]);
        out << "\n";
    }
    out << std::right;
    out << "in range: " << (sys.in_range(f) ? "yes" : "no") << "\n";
    out << "lp-limit of |f| (p_max = " << opt.p_max << "):\n";
    for (const auto& st : lp.steps)
        out << "  p = " << st.p << "  gap = " << detail::fmt_double(st.gap) << "  N_p = " << detail::fmt_doubles(st.norm)
            << "\n";
    out << "monotone in p: " << (lp.monotone ? "yes" : "no") << "\n";
    return kSuccess;
}

namespace detail {

inline std::string describe(const AipViolation& v) {
    std::ostringstream os;
    os << "t=" << v.time << " u=" << v.later << " atom " << to_string(v.atom) << ": ";
    if (v.side == BoundSide::lower)
        os << "m_F(S_" << v.later << ") = " << to_string(v.bound) << " > S_" << v.time << " = " << to_string(v.spot);
    else
        os << "S_" << v.time << " = " << to_string(v.spot) << " > M_F(S_" << v.later << ") = " << to_string(v.bound);
    return os.str();
}

inline Json violation_json(const AipViolation& v) {
    return {{"time", v.time},
            {"later", v.later},
            {"atom", condsup::detail::atom_json(v.atom)},
            {"side", std::string(to_string(v.side))},
            {"spot", to_string(v.spot)},
            {"bound", to_string(v.bound)}};
}

inline Json witnessed_violations_json(const AipReport& r, const MarketModel& m) {
    Json violations = Json::array();
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        Json v = violation_json(r.violations[i]);
        const ImmediateProfit& w = r.witnesses[i];
        v["certificate"] = {{"time", w.time},
                            {"price", condsup::detail::vector_json(w.price)},
                            {"strategy", strategy_json(w.strategy, m)}};
        violations.push_back(std::move(v));
    }
    return violations;
}

inline void write_witnesses(const AipReport& r, std::ostream& out) {
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        const ImmediateProfit& w = r.witnesses[i];
        const Atom& atom = r.violations[i].atom;
        out << "violation: " << describe(r.violations[i]) << "\n";
        out << "certificate: price " << to_string(w.price[atom.front()]) << " on atom " << to_string(atom)
            << " at t=" << w.time << " with theta_" << w.time << " = "
            << to_string(w.strategy.holding(w.time)[atom.front()]) << " super-replicates 0\n";
    }
}

inline int run_aip(const MarketModel& m, Format format, std::ostream& out) {
    const AipReport one = aip_check(m);
    const AipReport multi = aip_check_multiperiod(m);
    const bool agree = one.holds == multi.holds;
    if (format == Format::json) {
        Json violations = witnessed_violations_json(one, m);
        Json multi_v = Json::array();
        for (const auto& v : multi.violations) multi_v.push_back(violation_json(v));
        write_json(out, {{"command", "check"},
                         {"condition", "aip"},
                         {"holds", one.holds},
                         {"violations", std::move(violations)},
                         {"multiperiod", {{"holds", multi.holds}, {"agrees", agree}, {"violations", std::move(multi_v)}}}});
    } else {
        out << "AIP: " << (one.holds ? "holds" : "fails") << "\n";
        write_witnesses(one, out);
        out << "multi-period bounds: " << (multi.holds ? "hold" : "fail") << " ("
            << (agree ? "agrees" : "DISAGREES") << " with one-step check; violations: " << multi.violations.size()
            << ")\n";
    }
    return one.holds && agree ? kSuccess : kConditionFails;
}

inline int run_na(const MarketModel& m, Format format, std::ostream& out) {
    const NaCheckReport r = na_check(m);
    const NaReport oracle = arbitrage_bruteforce(m);
    const std::optional<ArbitrageCertificate>& cert = r.fallback ? r.fallback->certificate : oracle.certificate;
    if (format == Format::json) {
        Json j = {{"command", "check"},
                  {"condition", "na"},
                  {"holds", r.holds},
                  {"strictness_hypothesis", r.strictness_hypothesis},
                  {"decided_by", r.strictness_hypothesis ? "aip" : "sign-analysis"},
                  {"aip_holds", r.aip.holds},
                  {"agrees_with_sign_analysis", r.holds == oracle.holds}};
        if (cert)
            j["certificate"] = {{"time", cert->time},
                                {"atom", condsup::detail::atom_json(cert->atom)},
                                {"theta", to_string(cert->strategy.holding(cert->time)[cert->atom.front()])},
                                {"terminal", condsup::detail::vector_json(cert->terminal)}};
        write_json(out, j);
    } else {
        out << "NA: " << (r.holds ? "holds" : "fails") << " ("
            << (r.strictness_hypothesis ? "strictness hypothesis satisfied"
                                        : "strictness hypothesis fails; decided by sign analysis")
            << ")\n";
        out << "AIP: " << (r.aip.holds ? "holds" : "fails") << "\n";
        if (cert)
            out << "certificate: theta_" << cert->time << " = "
                << to_string(cert->strategy.holding(cert->time)[cert->atom.front()]) << " on atom "
                << to_string(cert->atom) << ", terminal value " << to_string(cert->terminal) << "\n";
    }
    return r.holds ? kSuccess : kConditionFails;
}

}  // namespace detail

/// AIP or NA verdict for the scenario's market. Exit 1 when it fails.
inline int run_check(const Scenario& s, CheckKind kind, Format format, std::ostream& out) {
    const MarketModel m = s.market();
    return kind == CheckKind::aip ? detail::run_aip(m, format, out) : detail::run_na(m, format, out);
}

/// Minimal superhedging price of a named claim plus its verification.
inline int run_price(const Scenario& s, const PriceOptions& opt, std::ostream& out) {
    const Vector* payoff = s.find_claim(opt.claim);
    if (!payoff) throw ValidationError("no claim named \"" + opt.claim + "\" in the claims section");
    const MarketModel m = s.market();
    if (opt.time > m.horizon())
        throw ValidationError("time " + std::to_string(opt.time) + " is past the horizon " +
                              std::to_string(m.horizon()));
    if (opt.eps <= 0) throw ValidationError("eps must be positive");
    const Claim h{*payoff};
    const std::size_t t = opt.time;

    SuperhedgeResult priced = [&] {
        try {
            return superhedge_price(m, h, t);
        } catch (const UnboundedPriceError& e) {
            const AipReport aip = aip_check(m);
            if (opt.format == Format::json) {
                detail::write_json(out, {{"command", "price"},
                                         {"claim", opt.claim},
                                         {"time", t},
                                         {"bounded", false},
                                         {"aip_failure", {{"time", e.time()}, {"atom", condsup::detail::atom_json(e.atom())}}},
                                         {"violations", detail::witnessed_violations_json(aip, m)}});
            } else {
                out << "price: " << e.what() << "\n";
                detail::write_witnesses(aip, out);
            }
            throw;
        }
    }();
    const SuperhedgeVerification check = superhedge_verify(m, h, t, priced.price, opt.eps);

    if (opt.format == Format::json) {
        Json atoms = Json::array();
        for (const auto& a : check.atoms)
            atoms.push_back({{"atom", condsup::detail::atom_json(a.atom)},
                             {"price", to_string(a.price)},
                             {"lower_bound", to_string(a.lower_bound)},
                             {"refuted", a.refuted}});
        detail::write_json(out, {{"command", "price"},
                                 {"claim", opt.claim},
                                 {"time", t},
                                 {"bounded", true},
                                 {"price", condsup::detail::vector_json(priced.price)},
                                 {"strategy", detail::strategy_json(priced.strategy, m)},
                                 {"verification",
                                  {{"eps", to_string(opt.eps)},
                                   {"certified", check.certified},
                                   {"minimal", check.minimal},
                                   {"surplus", condsup::detail::vector_json(check.surplus)},
                                   {"atoms", std::move(atoms)}}}});
    } else {
        out << "claim " << opt.claim << " at t = " << t << "\n";
        for (const Atom& atom : m.partition(t).atoms()) {
            out << "atom " << to_string(atom) << ": pi_" << t << " = " << to_string(priced.price[atom.front()]);
            if (t < m.horizon()) out << ", theta_" << t << " = " << to_string(priced.strategy.holding(t)[atom.front()]);
            out << "\n";
        }
        for (std::size_t u = t + 1; u < m.horizon(); ++u)
            for (const Atom& atom : m.partition(u).atoms())
                out << "  then at t = " << u << " on atom " << to_string(atom) << ": pi_" << u << " = "
                    << to_string(priced.values[u - t][atom.front()]) << ", theta_" << u << " = "
                    << to_string(priced.strategy.holding(u)[atom.front()]) << "\n";
        out << "certificate: price + v - h = " << to_string(check.surplus)
            << (check.certified ? " >= 0" : " has negative entries") << "\n";
        for (const auto& a : check.atoms)
            out << "minimality on atom " << to_string(a.atom) << ": lower bound " << to_string(a.lower_bound)
                << (a.refuted ? " > " : " <= ") << "price - eps = " << to_string(a.price - opt.eps) << "\n";
        if (check.ok())
            out << "verified minimal at eps=" << to_string(opt.eps) << "\n";
        else
            out << "VERIFICATION FAILED at eps=" << to_string(opt.eps) << "\n";
    }
    return check.ok() ? kSuccess : kConditionFails;
}

/// Ergodicity verdict, the max-ergodic probe and a Cesàro table for every
/// named vector. Exit 1 only if the two ergodicity tests disagree.
inline int run_ergodic(const Scenario& s, const ErgodicOptions& opt, std::ostream& out) {
    if (!s.transform) throw ValidationError("scenario has no transform section");
    const TransformSystem ts(s.space, *s.transform);
    const bool ergodic = is_ergodic(ts);
    const MaxErgodicReport probe = max_ergodic_check(ts, opt.trials, opt.seed);

    struct Row {
        const NamedVector* v;
        Vector cesaro, expectation, tmax, csup;
    };
    std::vector<Row> rows;
    for (const auto& nv : s.vectors)
        rows.push_back({&nv, cesaro_mean(ts, nv.value, ts.period()), cond_expectation(nv.value, ts.system()),
                        time_max(ts, nv.value), cond_sup(nv.value, ts.system())});

    if (opt.format == Format::json) {
        using condsup::detail::vector_json;
        Json cycles = Json::array();
        for (const auto& c : ts.cycles()) cycles.push_back(c);
        Json table = Json::array();
        for (const auto& r : rows)
            table.push_back({{"name", r.v->name},
                             {"cesaro", vector_json(r.cesaro)},
                             {"expectation", vector_json(r.expectation)},
                             {"time_max", vector_json(r.tmax)},
                             {"sup", vector_json(r.csup)}});
        Json j = {{"command", "ergodic"},
                  {"ergodic", ergodic},
                  {"cycles", std::move(cycles)},
                  {"period", ts.period()},
                  {"max_ergodic", {{"consistent", probe.consistent}, {"trials", probe.trials}, {"mismatches", probe.mismatches}}},
                  {"vectors", std::move(table)}};
        if (probe.counterexample) j["max_ergodic"]["counterexample"] = vector_json(*probe.counterexample);
        detail::write_json(out, j);
    } else {
        out << "ergodic: " << (ergodic ? "yes" : "no") << "; max-ergodic: ";
        if (probe.consistent)
            out << "consistent (" << probe.trials << " trials)\n";
        else
            out << "inconsistent (" << probe.mismatches << " of " << probe.trials << " trials differ)\n";
        if (probe.counterexample)
            out << "counterexample: f = " << to_string(*probe.counterexample) << ", time max "
                << to_string(time_max(ts, *probe.counterexample)) << " != M_F "
                << to_string(cond_sup(*probe.counterexample, ts.system())) << "\n";
        out << "cycles:";
        for (const auto& c : ts.cycles()) {
            out << " (";
            for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
            out << ")";
        }
        out << "\nperiod: " << ts.period() << "\n";
        for (const auto& r : rows)
            out << r.v->name << ": cesaro " << to_string(r.cesaro) << ", F f " << to_string(r.expectation)
                << ", time max " << to_string(r.tmax) << ", M_F " << to_string(r.csup) << "\n";
    }
    return ergodic == probe.consistent ? kSuccess : kConditionFails;
}

}  // namespace condsup::cli
