#include "qtoda/run.hpp"

#include "qtoda/coefficients.hpp"
#include "qtoda/eigenfunctions.hpp"
#include "qtoda/errors.hpp"
#include "qtoda/verification.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qtoda {

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += '"';
    return out;
}

ParamPoint resolve_point(const RunConfig& cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("run: n must be >= 1");
    if (cfg.order < 0)
        throw std::invalid_argument("run: order must be >= 0");
    if (cfg.s && static_cast<int>(cfg.s->size()) != cfg.n)
        throw std::invalid_argument("run: --s must list exactly n values");

    const long bound = cfg.order;
    if (cfg.q && cfg.s)
        return ParamPoint::make(*cfg.q, *cfg.s, bound);

    std::mt19937_64 rng(cfg.seed);
    if (!cfg.q && !cfg.s)
        return draw_generic_point(cfg.n, bound, rng);

    // One side fixed: redraw the other until the pair passes.
    for (int attempt = 0; attempt < 64; ++attempt) {
        const ParamPoint draft = draw_generic_point(cfg.n, 0, rng);
        const Rational qv = cfg.q ? *cfg.q : draft.q();
        const std::vector<Rational> sv = cfg.s ? *cfg.s : draft.s();
        if (genericity_check(qv, sv, cfg.n, bound).ok())
            return ParamPoint::make(qv, sv, bound);
    }
    throw GenericityExhausted("run: no generic completion of the given parameters found");
}

void emit_series(const TruncatedSeries& f, RunConfig::Format format, std::ostream& out) {
    if (format == RunConfig::Format::Json) {
        out << to_json(f).dump(2) << "\n";
        return;
    }
    const int n = f.variant().n;
    for (int i = 1; i <= n; ++i)
        out << "exponent_" << i << ",";
    out << "coefficient\n";
    for (const auto& [exp, c] : f.terms()) {
        for (long e : exp)
            out << e << ",";
        out << c.str() << "\n";
    }
}

int run_series(const RunConfig& cfg, std::ostream& out) {
    const ParamPoint p = resolve_point(cfg);
    const TruncatedSeries f = cfg.command == RunConfig::Command::FA
                                  ? toda_a_direct(p, cfg.order)
                                  : toda_b_branching(p, cfg.order);
    emit_series(f, cfg.format, out);
    return 0;
}

int run_branch_coeffs(const RunConfig& cfg, std::ostream& out) {
    const ParamPoint p = resolve_point(cfg);
    const int n = p.n();
    PochhammerTable table(p.q());
    std::vector<long> weights;
    for (int i = 1; i <= n; ++i)
        weights.push_back(n + 1 - i);

    if (cfg.format == RunConfig::Format::Json) {
        nlohmann::json s = nlohmann::json::array();
        for (const Rational& v : p.s())
            s.push_back(v.str());
        nlohmann::json rows = nlohmann::json::array();
        for (const ThetaVector& theta : enumerate_weighted_vectors(weights, cfg.order))
            rows.push_back({{"theta", theta}, {"value", e_branch(theta, p, table).str()}});
        const nlohmann::json doc = {{"n", n},
                                    {"order", cfg.order},
                                    {"params", {{"q", p.q().str()}, {"s", std::move(s)}}},
                                    {"rows", std::move(rows)}};
        out << doc.dump(2) << "\n";
    } else {
        for (int i = 1; i <= n; ++i)
            out << "theta_" << i << ",";
        out << "value\n";
        for (const ThetaVector& theta : enumerate_weighted_vectors(weights, cfg.order)) {
            for (long t : theta)
                out << t << ",";
            out << e_branch(theta, p, table).str() << "\n";
        }
    }
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.q || cfg.s)
        throw std::invalid_argument(
            "run: verify draws its points from --seed; --q/--s apply to fa, fb and branch-coeffs");
    VerifySettings st;
    st.n = cfg.n;
    st.order = cfg.order;
    st.points = cfg.points;
    st.seed = cfg.seed;
    st.checks = cfg.checks;
    const std::vector<CheckReport> reports = run_verification(st);

    if (cfg.format == RunConfig::Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckReport& r : reports)
            arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        out << "check,n,order,params,seed,pass,firstFailure,trustedDegree\n";
        for (const CheckReport& r : reports) {
            const nlohmann::json j = to_json(r);
            out << csv_quote(r.check) << "," << r.n << "," << r.order << ","
                << csv_quote(j.at("params").dump()) << "," << r.seed << ","
                << (r.pass ? "true" : "false") << "," << csv_quote(j.at("firstFailure").dump())
                << "," << r.trusted_degree << "\n";
        }
    }
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
    return all_pass ? 0 : 1;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
        case RunConfig::Command::FA:
        case RunConfig::Command::FB:
            return run_series(cfg, out);
        case RunConfig::Command::BranchCoeffs:
            return run_branch_coeffs(cfg, out);
        case RunConfig::Command::Verify:
            return run_verify(cfg, out);
        }
        throw std::invalid_argument("run: unknown command");
    } catch (const NonGenericPoint& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GenericityExhausted& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace qtoda
