// olpuc: command-line front end.
// exit 0 success, 1 a residual above tolerance, 2 bad input
#include "olpuc/checks.hpp"
#include "olpuc/error.hpp"
#include "olpuc/io.hpp"
#include "olpuc/quadrature.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

using namespace olpuc;

namespace {

struct Common {
    std::string measure_file;
    std::string ordering = "1,1";
    int size = 16;
    std::string output;
    std::string format;
    unsigned seed = 42;
    int points = 20;
    int quad_n = -1;
};

struct Times {
    std::string t1, t2;
    DeformationTimes get() const {
        DeformationTimes t;
        if (!t1.empty()) t.t1 = parse_complex_list(t1);
        if (!t2.empty()) t.t2 = parse_complex_list(t2);
        return t;
    }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw Error(ErrorKind::ParseError, path + ": cannot open for writing");
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* c, Common& o, bool checks) {
    c->add_option("-m,--measure", o.measure_file, "measure spec (JSON)")->required()->check(CLI::ExistingFile);
    c->add_option("-n,--ordering", o.ordering, "ordering n+,n-")->capture_default_str();
    c->add_option("-l,--size", o.size, "truncation size")->capture_default_str();
    c->add_option("-o,--output", o.output, "output file (default stdout)");
    if (checks) {
        c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--seed", o.seed, "seed for random test points")->capture_default_str();
        c->add_option("--points", o.points, "random points per region")->capture_default_str();
        c->add_option("--quad-n", o.quad_n, "trapezoid nodes (default OLPUC_QUAD_N or 4096)");
    }
}

void add_times(CLI::App* c, Times& t, const std::string& prefix = "") {
    c->add_option("--" + prefix + "t1", t.t1, "times t_1j, comma separated complex");
    c->add_option("--" + prefix + "t2", t.t2, "times t_2j, comma separated complex");
}

struct Setup {
    Measure m;
    Ordering ord;
};

Setup setup(const Common& o) {
    const Ordering ord = parse_ordering(o.ordering);
    if (o.size < ord.period() + 4)
        throw Error(ErrorKind::ParseError, "size must be at least n+ + n- + 4 = " + std::to_string(ord.period() + 4));
    return {load_measure(o.measure_file), ord};
}

int report(const Common& o, const std::vector<CheckResult>& r, const std::string& default_format) {
    Output out(o.output);
    const std::string f = o.format.empty() ? default_format : o.format;
    if (f == "json") {
        write_report_json(out.os(), r);
    } else {
        out.os() << "check,residual,tolerance,pass\n" << std::setprecision(15);
        for (const auto& c : r) out.os() << c.check << ',' << c.residual << ',' << c.tolerance << ',' << c.pass << '\n';
    }
    if (!all_pass(r)) {
        std::cerr << "verification failed:\n";
        std::vector<CheckResult> bad;
        for (const auto& c : r)
            if (!c.pass) bad.push_back(c);
        write_report_table(std::cerr, bad);
        return 1;
    }
    return 0;
}

CheckResult make(const std::string& name, double residual, double tol, std::map<std::string, std::string> p = {}) {
    return {name, std::move(p), residual, tol, std::isfinite(residual) && residual < tol};
}

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laurent orthogonal polynomials on the unit circle"};
    app.require_subcommand(1);

    Common co;
    Times tm, tp;
    std::string lambda = "0.3+0.1i", direction = "T1", kind = "D1", which = "C11", zs = "1.5";
    cplx t11 = 0.1, t21 = 0.0;
    std::string t11s = "0.1", t21s = "0";
    int steps = 100, every = 1, bk = 2, bl = 1, nodes = 2048;
    double r0 = 0.5, rinf = 2.0;

    auto* moments = app.add_subcommand("moments", "truncated moment matrix as CSV");
    add_common(moments, co, false);
    auto* fact = app.add_subcommand("factorize", "Gauss-Borel factors as CSV");
    add_common(fact, co, false);
    auto* verb = app.add_subcommand("verblunsky", "Verblunsky coefficients, rho and pivots as CSV");
    add_common(verb, co, false);
    auto* cd = app.add_subcommand("cd-check", "kernel sum / ABC / CD formula residuals per level");
    add_common(cd, co, true);
    auto* sk = app.add_subcommand("second-kind", "second-kind functions by every applicable method");
    add_common(sk, co, false);
    sk->add_option("--which", which, "C11 C12 C21 C22 C1 C2")
        ->check(CLI::IsMember({"C11", "C12", "C21", "C22", "C1", "C2"}))
        ->capture_default_str();
    sk->add_option("-z", zs, "evaluation point")->capture_default_str();
    auto* ev = app.add_subcommand("evolve", "Toeplitz lattice flow, trajectory CSV");
    add_common(ev, co, false);
    ev->add_option("--t11", t11s, "total t11")->capture_default_str();
    ev->add_option("--t21", t21s, "total t21")->capture_default_str();
    ev->add_option("--steps", steps, "RK4 steps")->capture_default_str()->check(CLI::PositiveNumber);
    ev->add_option("--every", every, "snapshot stride")->capture_default_str()->check(CLI::PositiveNumber);
    auto* ds = app.add_subcommand("discrete-step", "one discrete flow step; Verblunsky CSV of the new measure");
    add_common(ds, co, true);
    ds->add_option("--lambda", lambda, "spectral parameter, |lambda| < 1")->capture_default_str();
    ds->add_option("--direction", direction, "T1 or T2")->check(CLI::IsMember({"T1", "T2"}))->capture_default_str();
    ds->add_option("--kind", kind, "D1, D2 or pair")->check(CLI::IsMember({"D1", "D2", "pair"}))->capture_default_str();
    auto* tc = app.add_subcommand("tau-check", "tau-function identities");
    add_common(tc, co, true);
    add_times(tc, tm);
    auto* bc = app.add_subcommand("bilinear-check", "bilinear contour identities");
    add_common(bc, co, true);
    add_times(bc, tm);
    add_times(bc, tp, "p");
    bc->add_option("-k", bk, "index of phi_1")->capture_default_str();
    bc->add_option("--lev", bl, "index of phi_2")->capture_default_str();
    bc->add_option("--r0", r0, "inner radius")->capture_default_str();
    bc->add_option("--rinf", rinf, "outer radius")->capture_default_str();
    bc->add_option("--nodes", nodes, "trapezoid nodes per circle")->capture_default_str();
    auto* va = app.add_subcommand("verify-all", "every invariant suite; JSON report");
    add_common(va, co, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Setup s = setup(co);
        const int n = co.size;
        const int N = co.quad_n > 0 ? co.quad_n : default_quad_n();

        if (moments->parsed()) {
            const Mat g = build_moments(s.m, s.ord, n);
            Output out(co.output);
            out.os() << "j,k,re,im\n" << std::setprecision(15);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) out.os() << j << ',' << k << ',' << g(j, k).real() << ',' << g(j, k).imag() << '\n';
            return 0;
        }
        if (fact->parsed()) {
            const GaussBorelFactors gb = factorize(s.m, s.ord, n);
            Output out(co.output);
            out.os() << "matrix,i,j,re,im\n" << std::setprecision(15);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    out.os() << "S1," << i << ',' << j << ',' << gb.S1(i, j).real() << ',' << gb.S1(i, j).imag() << '\n';
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    out.os() << "S2," << i << ',' << j << ',' << gb.S2(i, j).real() << ',' << gb.S2(i, j).imag() << '\n';
            return 0;
        }
        if (verb->parsed()) {
            const VerblunskyData v = verblunsky(factorize(s.m, s.ord, n), s.ord);
            Output out(co.output);
            write_verblunsky_csv(out.os(), v);
            return 0;
        }
        if (cd->parsed()) {
            const Mat g = build_moments(s.m, s.ord, n);
            const GaussBorelFactors gb = gauss_borel(g);
            PointSampler ps(co.seed);
            const auto pairs = cd_pairs(ps, co.points);
            const int lmax = trusted_size(s.ord, n) - 1;
            std::vector<CheckResult> r;
            for (int l = 1; l <= lmax; ++l) {
                const CDTriple t = cd_triple_residual(g, gb, s.ord, l, pairs);
                const std::map<std::string, std::string> p{{"l", std::to_string(l)}};
                r.push_back(make("cd.kernel_abc.l" + std::to_string(l), t.abc, 1e-9, p));
                r.push_back(make("cd.cd_formula.l" + std::to_string(l), t.cd, 1e-9, p));
            }
            const std::vector<PointPair> few(pairs.begin(), pairs.begin() + std::min<size_t>(pairs.size(), 5));
            r.push_back(make("cd.reproducing", reproducing_residual(s.m, gb, s.ord, lmax, few, N), 1e-8));
            return report(co, r, "csv");
        }
        if (sk->parsed()) {
            static const std::map<std::string, SecondKind> kinds{{"C11", SecondKind::C11}, {"C12", SecondKind::C12},
                                                                 {"C21", SecondKind::C21}, {"C22", SecondKind::C22},
                                                                 {"C1", SecondKind::C1},   {"C2", SecondKind::C2}};
            const SecondKind w = kinds.at(which);
            const cplx z = parse_complex(zs);
            const GaussBorelFactors gb = factorize(s.m, s.ord, n);
            Output out(co.output);
            out.os() << "l,method,re,im\n" << std::setprecision(15);
            const std::pair<const char*, SKMethod> methods[] = {{"series", SKMethod::series},
                                                                {"cauchy", SKMethod::cauchy},
                                                                {"gamma_det", SKMethod::gamma_det},
                                                                {"geronimus", SKMethod::geronimus}};
            for (int l = 0; l < n; ++l)
                for (const auto& [name, method] : methods) {
                    try {
                        const int nq = method == SKMethod::cauchy || method == SKMethod::geronimus ? N : -1;
                        const cplx c = second_kind(s.m, gb, s.ord, l, w, z, method, nq);
                        out.os() << l << ',' << name << ',' << c.real() << ',' << c.imag() << '\n';
                    } catch (const Error& e) {
                        // a method not valid at z (or at l = 0 for the Geronimus form) is left out
                        if (e.kind() != ErrorKind::OutsideRegion && e.kind() != ErrorKind::QuadratureNearCircle &&
                            e.kind() != ErrorKind::IndexOutOfRange)
                            throw;
                    }
                }
            return 0;
        }
        if (ev->parsed()) {
            t11 = parse_complex(t11s);
            t21 = parse_complex(t21s);
            const VerblunskyData v0 = refactorize_at_time(s.m, Ordering(1, 1), {}, n);
            const auto traj = integrate_flow_trajectory(v0, t11, t21, steps, every);
            Output out(co.output);
            write_trajectory_csv(out.os(), traj);
            return 0;
        }
        if (ds->parsed()) {
            const cplx lam = parse_complex(lambda);
            const StepKind k = kind == "D1" ? StepKind::D1 : kind == "D2" ? StepKind::D2 : StepKind::conj_pair;
            const StepDirection d = direction == "T1" ? StepDirection::T1 : StepDirection::T2;
            const GaussBorelFactors gb = factorize(s.m, s.ord, n);
            const DiscreteResult r = discrete_step(s.m, gb, s.ord, lam, d, k);
            {
                Output out(co.output);
                write_verblunsky_csv(out.os(), verblunsky(r.gb, s.ord));
            }
            std::vector<CheckResult> checks{make("discrete.two_path", std::max(r.two_path_minus, r.two_path_plus), 1e-8),
                                            make("discrete.darboux", r.darboux, 1e-8)};
            if (k == StepKind::conj_pair && is_positive(s.m, gb))
                checks.push_back(make("discrete.positivity", r.min_h_real > 0.0 ? r.max_h_imag : INFINITY, 1e-10,
                                      {{"min_h", num(r.min_h_real)}}));
            write_report_table(std::cerr, checks);
            return all_pass(checks) ? 0 : 1;
        }
        if (tc->parsed()) {
            const DeformationTimes t = tm.get();
            PointSampler ps(co.seed);
            const int lmax = std::min(8, n);
            std::vector<CheckResult> r;
            r.push_back(make("tau.pivot", pivot_residual(s.m, s.ord, t, lmax), 1e-9));
            const auto pts = tau_points(ps, co.points);
            for (int l = s.ord.period(); l <= lmax; ++l) {
                double e = 0.0;
                for (cplx z : pts) e = std::max(e, tau_poly_residual(s.m, s.ord, t, l, z));
                r.push_back(make("tau.representation.l" + std::to_string(l), e, 1e-8));
            }
            if (is_positive(s.m, factorize(s.m, s.ord, n)) && t.is_zero())
                for (int l = s.ord.period(); l <= std::min(6, n); ++l) {
                    double e = 0.0;
                    for (cplx z : pts) e = std::max(e, tau_second_kind_residual(s.m, s.ord, t, l, z));
                    r.push_back(make("tau.second_kind.l" + std::to_string(l), e, 1e-6));
                }
            return report(co, r, "csv");
        }
        if (bc->parsed()) {
            const DeformationTimes t = tm.get(), tq = tp.get();
            const BilinearReport b = bilinear_report(s.m, s.ord, t, tq, bk, bl, r0, rinf, nodes);
            std::vector<CheckResult> r{make("bilinear.polynomial", b.residual, 1e-6,
                                            {{"k", std::to_string(bk)}, {"l", std::to_string(bl)}})};
            if (bk < n && bl < n) {
                const BilinearReport w = wave_bilinear_report(s.m, s.ord, t, tq, bk, bl, r0, nodes);
                r.push_back(make("bilinear.wave", w.residual, 1e-6));
            }
            return report(co, r, "csv");
        }
        if (va->parsed()) {
            SuiteOptions opt;
            opt.size = n;
            opt.seed = co.seed;
            opt.points = co.points;
            opt.quad_n = N;
            return report(co, verify_all(s.m, s.ord, opt), "json");
        }
    } catch (const Error& e) {
        std::cerr << "olpuc: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "olpuc: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
