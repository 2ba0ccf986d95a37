#include <CLI11.hpp>

#include <pseudowalk/io.hpp>
#include <pseudowalk/pseudowalk.hpp>
#include <pseudowalk/verify.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace pw;

namespace {

struct Args {
    int N = 1;
    std::string c;
    std::optional<std::string> a, b, x;
    std::optional<double> z, lambda, mu;
    std::optional<std::string> zeta;
    std::optional<long> n, ell;
    std::optional<long> horizon;
    std::optional<std::string> format;
    int precision = 12;
    std::optional<std::string> output;
    std::uint64_t seed = 20240601;
    std::string suite = "all";
    std::string mode;
};

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long as_long(const std::optional<std::string>& s, const char* flag)
{
    require(s.has_value(), std::string("--") + flag + " is required");
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(*s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s->size() && used > 0, std::string("--") + flag + " must be an integer, got '" + *s + "'");
    return v;
}

double as_double(const std::optional<std::string>& s, const char* flag)
{
    require(s.has_value(), std::string("--") + flag + " is required");
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(*s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s->size() && used > 0 && std::isfinite(v), std::string("--") + flag + " must be a real number, got '" + *s + "'");
    return v;
}

template <class T>
T need(const std::optional<T>& v, const char* flag)
{
    require(v.has_value(), std::string("--") + flag + " is required");
    return *v;
}

Rational scale_of(const Args& g)
{
    require(!g.c.empty(), "--c is required (exact rational p/q)");
    return parse_rational(g.c);
}

WalkParams walk_of(const Args& g) { return WalkParams(g.N, scale_of(g)); }

cplx parse_complex(const std::string& s)
{
    const auto comma = s.find(',');
    const std::optional<std::string> re = s.substr(0, comma);
    const std::optional<std::string> im = comma == std::string::npos ? std::string("0") : s.substr(comma + 1);
    return {as_double(re, "zeta"), as_double(im, "zeta")};
}

template <class Key>
std::string rational_rows(const std::string& key, const std::vector<std::pair<Key, Rational>>& rows)
{
    std::ostringstream os;
    os << key << ",numerator,denominator\n";
    for (const auto& [k, v] : rows) os << k << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
    return os.str();
}

template <class Key>
json rational_rows_json(const std::string& key, const std::vector<std::pair<Key, Rational>>& rows)
{
    json arr = json::array();
    for (const auto& [k, v] : rows) arr.push_back({{key, k}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}});
    return arr;
}

std::string complex_rows(const OutputSpec& out, const std::string& key, const std::vector<std::pair<std::string, cplx>>& rows,
                         const std::vector<SeriesValue>& oracle = {})
{
    if (out.format == Format::json) {
        json arr = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json o{{key, rows[i].first}, {"value", complex_json(rows[i].second, out.precision)}};
            if (!oracle.empty()) {
                o["series"] = rounded(oracle[i].value.get_d(), out.precision);
                o["tail"] = rounded(oracle[i].tail.get_d(), out.precision);
            }
            arr.push_back(o);
        }
        return arr.dump() + "\n";
    }
    std::ostringstream os;
    os << key << ",re,im" << (oracle.empty() ? "" : ",series,tail") << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << rows[i].first << ',' << format_double(rows[i].second.real(), out.precision) << ','
           << format_double(rows[i].second.imag(), out.precision);
        if (!oracle.empty())
            os << ',' << format_double(oracle[i].value.get_d(), out.precision) << ',' << format_double(oracle[i].tail.get_d(), out.precision);
        os << '\n';
    }
    return os.str();
}

// truncated DP series at z for each boundary cell, when --horizon is given
std::vector<SeriesValue> oracle_column(const Args& g, const AbsorbingDP& dp, const std::vector<long>& cells)
{
    std::vector<SeriesValue> col;
    if (!g.horizon) return col;
    require(*g.horizon >= 1 && *g.horizon <= 2000, "--horizon must lie in [1, 2000]");
    const Rational z(*g.z);
    require(bounds(dp.params).m1 * z < 1, "--horizon needs z below 1/M1 so that the series converges");
    const DPRun run = run_absorbing(dp);
    for (long l : cells) col.push_back(eval_series(first_passage_series(dp, run, l), z));
    return col;
}

std::string measure_out(const OutputSpec& out, const SignedMeasure& m)
{
    return out.format == Format::json ? measure_json(m).dump() + "\n" : measure_csv(m);
}

std::string exact_rows_out(const OutputSpec& out, const std::string& key, const std::vector<std::pair<long, Rational>>& rows)
{
    return out.format == Format::json ? rational_rows_json(key, rows).dump() + "\n" : rational_rows(key, rows);
}

std::string cmd_pmf(const Args& g, const OutputSpec& out)
{
    const long n = need(g.n, "n");
    require(n >= 0, "--n must be non-negative");
    return measure_out(out, walk_pmf_closed(walk_of(g), n));
}

std::string cmd_cdf(const Args& g, const OutputSpec& out)
{
    const WalkParams p = walk_of(g);
    const long n = need(g.n, "n");
    require(n >= 0, "--n must be non-negative");
    std::vector<std::pair<long, Rational>> rows;
    for (long k = -p.N * n; k <= p.N * n; ++k) rows.emplace_back(k, walk_cdf_closed(p, n, k));
    return exact_rows_out(out, "k", rows);
}

std::string cmd_roots(const Args& g, const OutputSpec& out)
{
    const RootSet r = roots(walk_of(g), need(g.z, "z"));
    if (out.format == Format::json) {
        json u = json::array(), v = json::array();
        for (std::size_t j = 0; j < r.u.size(); ++j) {
            u.push_back(complex_json(r.u[j], out.precision));
            v.push_back(complex_json(r.v[j], out.precision));
        }
        return json{{"z", rounded(r.z, out.precision)}, {"w", rounded(r.w, out.precision)}, {"u", u}, {"v", v}}.dump() + "\n";
    }
    std::ostringstream os;
    os << "j,u_re,u_im,v_re,v_im\n";
    for (std::size_t j = 0; j < r.u.size(); ++j)
        os << j + 1 << ',' << format_double(r.u[j].real(), out.precision) << ',' << format_double(r.u[j].imag(), out.precision) << ','
           << format_double(r.v[j].real(), out.precision) << ',' << format_double(r.v[j].imag(), out.precision) << '\n';
    return os.str();
}

// G_k(z) for k = --x, or the double generating function when --zeta is given
std::string cmd_genfun(const Args& g, const OutputSpec& out)
{
    const WalkParams p = walk_of(g);
    const double z = need(g.z, "z");
    if (g.zeta) return complex_rows(out, "zeta", {{*g.zeta, G_double(p, parse_complex(*g.zeta), z)}});
    const long k = g.x ? as_long(g.x, "x") : 0;
    return complex_rows(out, "k", {{std::to_string(k), G_k(p, z, k)}});
}

std::string cmd_overshoot(const Args& g, const OutputSpec& out)
{
    const long b = as_long(g.b, "b");
    if (!g.z) {
        require(b >= 1, "--b must be at least 1");
        return measure_out(out, dist_S_b_plus(g.N, b).measure());
    }
    const WalkParams p = walk_of(g);
    std::vector<std::pair<std::string, cplx>> rows;
    if (g.zeta) {
        rows.emplace_back(*g.zeta, H_plus_double(p, b, *g.z, parse_complex(*g.zeta)));
        return complex_rows(out, "zeta", rows);
    }
    std::vector<long> cells;
    if (g.ell) {
        rows.emplace_back(std::to_string(*g.ell), H_plus(p, b, *g.ell, *g.z));
        cells.push_back(*g.ell);
    } else {
        const std::vector<cplx> h = H_plus_from_roots(roots(p, *g.z), b);
        for (std::size_t i = 0; i < h.size(); ++i) {
            rows.emplace_back(std::to_string(b + long(i)), h[i]);
            cells.push_back(b + long(i));
        }
    }
    const AbsorbingDP dp{p, std::nullopt, b, g.horizon.value_or(40), 0};
    return complex_rows(out, "ell", rows, oracle_column(g, dp, cells));
}

std::string cmd_exit(const Args& g, const OutputSpec& out)
{
    const long a = as_long(g.a, "a"), b = as_long(g.b, "b");
    if (!g.z) return measure_out(out, dist_S_ab(g.N, a, b).measure());
    const WalkParams p = walk_of(g);
    std::vector<std::pair<std::string, cplx>> rows;
    if (g.zeta) {
        rows.emplace_back(*g.zeta, exit_H_double(p, a, b, *g.z, parse_complex(*g.zeta)));
        return complex_rows(out, "zeta", rows);
    }
    std::vector<long> cells;
    if (g.ell) {
        rows.emplace_back(std::to_string(*g.ell), exit_H(p, a, b, *g.ell, *g.z));
        cells.push_back(*g.ell);
    } else {
        for (const auto& [l, h] : exit_H_all(p, a, b, *g.z)) {
            rows.emplace_back(std::to_string(l), h);
            cells.push_back(l);
        }
    }
    const AbsorbingDP dp{p, a, b, g.horizon.value_or(40), 0};
    return complex_rows(out, "ell", rows, oracle_column(g, dp, cells));
}

std::string cmd_ruin(const Args& g, const OutputSpec& out)
{
    const auto [down, up] = ruin_probs(g.N, as_long(g.a, "a"), as_long(g.b, "b"));
    if (out.format == Format::json) return json{{"p_down", rational_json(down)}, {"p_up", rational_json(up)}}.dump() + "\n";
    return rational_rows<std::string>("event", {{"p_down", down}, {"p_up", up}});
}

// power moments of orders 1..n of the overshoot above b, or of the exit position when --a is given
std::string cmd_moments(const Args& g, const OutputSpec& out)
{
    const long n = need(g.n, "n");
    require(n >= 1, "--n must be at least 1");
    const long b = as_long(g.b, "b");
    std::vector<std::pair<long, Rational>> rows;
    if (g.a) {
        const long a = as_long(g.a, "a");
        for (long k = 1; k <= n; ++k) rows.emplace_back(k, moments_S_ab(g.N, a, b, k));
    } else {
        for (long k = 1; k <= n; ++k) rows.emplace_back(k, moments_S_b_plus(g.N, b, k));
    }
    return exact_rows_out(out, "order", rows);
}

// coefficients of the boundary polynomials, or their values at --x
std::string cmd_lauricella(const Args& g, const OutputSpec& out)
{
    const long a = as_long(g.a, "a"), b = as_long(g.b, "b");
    const BoundaryPolys bp = boundary_polys(g.N, a, b);
    const std::optional<Rational> x = g.x ? std::optional<Rational>(parse_rational(*g.x)) : std::nullopt;
    struct Row {
        std::string side;
        long j, power;
        Rational value;
    };
    std::vector<Row> rows;
    for (const auto& [side, polys] : {std::pair{"minus", &bp.pminus}, std::pair{"plus", &bp.pplus}})
        for (std::size_t j = 0; j < polys->size(); ++j) {
            const Polynomial& q = (*polys)[j];
            if (x) {
                rows.push_back({side, long(j), -1, q(*x)});
                continue;
            }
            for (std::size_t i = 0; i < q.coeffs.size(); ++i) rows.push_back({side, long(j), long(i), q.coeffs[i]});
        }
    if (out.format == Format::json) {
        json arr = json::array();
        for (const Row& r : rows) {
            json o{{"side", r.side}, {"j", r.j}};
            if (x) o["x"] = to_string(*x);
            else o["power"] = r.power;
            o["num"] = r.value.get_num().get_str();
            o["den"] = r.value.get_den().get_str();
            arr.push_back(o);
        }
        return arr.dump() + "\n";
    }
    std::ostringstream os;
    os << (x ? "side,j,x,numerator,denominator\n" : "side,j,power,numerator,denominator\n");
    for (const Row& r : rows)
        os << r.side << ',' << r.j << ',' << (x ? to_string(*x) : std::to_string(r.power)) << ',' << r.value.get_num().get_str() << ','
           << r.value.get_den().get_str() << '\n';
    return os.str();
}

std::string cmd_continuum(const Args& g, const OutputSpec& out)
{
    const std::string& m = g.mode;
    if (m == "xab") {
        const DiracComb d = law_X_ab(g.N, as_double(g.a, "a"), as_double(g.b, "b"));
        if (out.format == Format::json) {
            json arr = json::array();
            for (const auto& an : d.anchors) {
                json cs = json::array();
                for (double c : an.coeffs) cs.push_back(rounded(c, out.precision));
                arr.push_back({{"location", rounded(an.location, out.precision)}, {"coeffs", cs}});
            }
            return arr.dump() + "\n";
        }
        std::ostringstream os;
        os << "location,j,coeff\n";
        for (const auto& an : d.anchors)
            for (std::size_t j = 0; j < an.coeffs.size(); ++j)
                os << format_double(an.location, out.precision) << ',' << j << ',' << format_double(an.coeffs[j], out.precision) << '\n';
        return os.str();
    }
    const double c = to_double(scale_of(g));
    const double lam = need(g.lambda, "lambda");
    cplx v;
    if (m == "potential") v = lambda_potential(g.N, c, lam, as_double(g.x, "x"));
    else if (m == "taub") v = lf_tau_b(g.N, c, as_double(g.b, "b"), lam, need(g.mu, "mu"));
    else if (m == "tauab") v = lf_tau_ab(g.N, c, as_double(g.a, "a"), as_double(g.b, "b"), lam, need(g.mu, "mu"));
    else throw DomainError("continuum mode must be potential, taub, tauab or xab");
    if (out.format == Format::json) return json{{m, complex_json(v, out.precision)}}.dump() + "\n";
    return "re,im\n" + format_double(v.real(), out.precision) + ',' + format_double(v.imag(), out.precision) + '\n';
}

std::string cmd_verify(const Args& g, const OutputSpec& out)
{
    const std::vector<CaseResult> cases = run_verification(g.suite, g.seed);
    json arr = json::array();
    std::vector<std::string> failed;
    for (const CaseResult& c : cases) {
        arr.push_back({{"suite", c.suite}, {"case", c.id}, {"status", c.pass ? "pass" : "fail"}, {"max_error", rounded(c.max_error, out.precision)}});
        if (!c.pass) failed.push_back(c.id);
    }
    std::string text;
    if (out.format == Format::json) {
        text = arr.dump(1) + "\n";
    } else {
        std::ostringstream os;
        os << "suite,case,status,max_error\n";
        for (const CaseResult& c : cases)
            os << c.suite << ',' << c.id << ',' << (c.pass ? "pass" : "fail") << ',' << format_double(c.max_error, out.precision) << '\n';
        text = os.str();
    }
    if (!failed.empty()) {
        emit(out, text);
        std::ostringstream msg;
        msg << failed.size() << " of " << cases.size() << " cases failed:";
        for (const auto& id : failed) msg << "\n  " << id;
        throw VerificationFailed(msg.str());
    }
    return text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and numerical functionals of the pseudo-random walk driven by the iterated discrete Laplacian"};
    app.require_subcommand(1);
    Args g;
    app.add_option("--N", g.N, "order of the iterated Laplacian")->check(CLI::PositiveNumber);
    app.add_option("--c", g.c, "scale parameter as an exact rational p/q");
    app.add_option("--a", g.a, "lower threshold");
    app.add_option("--b", g.b, "upper threshold");
    app.add_option("--z", g.z, "generating-function variable in (0,1)");
    app.add_option("--zeta", g.zeta, "complex spatial variable re,im");
    app.add_option("--lambda", g.lambda, "Laplace variable");
    app.add_option("--mu", g.mu, "Fourier variable");
    app.add_option("--n", g.n, "number of steps or moment order");
    app.add_option("--ell", g.ell, "boundary cell");
    app.add_option("--x", g.x, "starting point or evaluation point");
    app.add_option("--horizon", g.horizon, "add the truncated oracle series at this horizon (overshoot, exit)");
    app.add_option("--format", g.format, "csv or json (default csv, json for verify)")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", g.precision, "significant digits of floats")->check(CLI::Range(1, 17));
    app.add_option("--output", g.output, "write to a file instead of standard output");
    app.add_option("--seed", g.seed, "seed of the randomized identities");
    app.add_option("--suite", g.suite, "verification suite")->check(CLI::IsMember({"walk", "overshoot", "exit", "appendix", "continuum", "all"}));

    using Handler = std::string (*)(const Args&, const OutputSpec&);
    const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
        {"pmf", "law of S_n (--N --c --n)", cmd_pmf},
        {"cdf", "distribution function of S_n (--N --c --n)", cmd_cdf},
        {"roots", "roots u_j, v_j of P_z (--N --c --z)", cmd_roots},
        {"genfun", "G_k(z) at k = --x, or the double generating function at --zeta", cmd_genfun},
        {"overshoot", "law of the overshoot above b, or H+ values with --z", cmd_overshoot},
        {"exit", "law of the exit position from (a,b), or H values with --z", cmd_exit},
        {"ruin", "ruin pseudo-probabilities (--N --a --b)", cmd_ruin},
        {"moments", "power moments up to order --n of the overshoot (or exit position with --a)", cmd_moments},
        {"lauricella", "boundary polynomials of (a,b), or their values at --x", cmd_lauricella},
        {"continuum", "continuum formulas: potential, taub, tauab, xab", cmd_continuum},
        {"verify", "run the cross-check suites", cmd_verify},
    };
    Handler chosen = nullptr;
    for (const auto& [name, help, fn] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (name == "continuum") sub->add_option("mode", g.mode, "potential, taub, tauab or xab")->required();
        sub->callback([&chosen, f = fn] { chosen = f; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 1;
    }

    try {
        OutputSpec out;
        out.format = parse_format(g.format.value_or(chosen == cmd_verify ? "json" : "csv"));
        out.precision = g.precision;
        out.path = g.output;
        emit(out, chosen(g, out));
        return 0;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
