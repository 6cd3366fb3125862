#include "sdt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sdt/algebraic.hpp"
#include "sdt/decoders.hpp"
#include "sdt/exponents.hpp"
#include "sdt/reductions.hpp"
#include "sdt/stats.hpp"

namespace sdt {

namespace {

std::vector<std::uint32_t> parse_csv_u32(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return out;
}

void print_report(std::ostream& out, const SolveReport& report, bool all) {
    const std::size_t shown = all ? report.solutions.size()
                                  : std::min<std::size_t>(report.solutions.size(), 1);
    for (std::size_t i = 0; i < shown; ++i) out << report.solutions[i].str() << '\n';
    out << "RESULT ok=" << (report.success ? 1 : 0) << " iters=" << report.iterations
        << " time_ms=" << static_cast<std::uint64_t>(report.time_ms) << '\n';
}

struct GenArgs {
    std::size_t n = 0;
    double rate = 0.0, tau = 0.0;
    unsigned q = 2;
    std::uint64_t seed = 0;
    std::string out_path;
};

struct SolveArgs {
    std::string alg, instance_path;
    std::size_t p = 0, ell = 0;
    unsigned depth = 1;
    std::optional<std::size_t> list_size;
    bool all = false;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::uint64_t max_iters = 0;
    // Berlekamp-Welch inputs
    unsigned q = 2;
    std::size_t k = 0;
    std::string xs, zs, ys;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
    if (a.alg == "bw") {
        FieldCtx ctx(a.q);
        auto xv = parse_csv_u32(a.xs);
        auto yv = parse_csv_u32(a.ys);
        auto zv = parse_csv_u32(a.zs);
        if (zv.empty()) zv.assign(xv.size(), 1);
        GrsCode code(ctx, xv, zv, a.k);
        auto res = bw_decode(code, FqVector(ctx, yv));
        if (!res) {
            out << "RESULT ok=0 iters=1 time_ms=0\n";
            return 1;
        }
        out << "f " << res->f.str() << '\n';
        out << "e " << res->error.str() << '\n';
        out << "RESULT ok=1 iters=1 time_ms=0\n";
        return 0;
    }

    DecodingInstance inst = read_dpi_file(a.instance_path);
    SolveReport report;
    if (a.alg == "prange") {
        PrangeConfig cfg;
        cfg.seed = a.seed;
        cfg.workers = a.workers;
        cfg.max_iterations = a.max_iters;
        report = prange(inst, cfg);
    } else if (a.alg == "dumer") {
        DumerConfig cfg;
        cfg.seed = a.seed;
        cfg.list_size = a.list_size;
        cfg.collect_all = a.all;
        if (a.max_iters) cfg.max_iterations = a.max_iters;
        report = dumer(inst, cfg);
    } else if (a.alg == "wagner") {
        WagnerConfig cfg;
        cfg.depth = a.depth;
        cfg.mode = a.all ? WagnerMode::amortized : WagnerMode::one_solution;
        cfg.seed = a.seed;
        cfg.max_iterations = a.max_iters ? a.max_iters : (a.all ? 1 : 1000);
        report = wagner(inst, cfg);
    } else if (a.alg == "isd-dumer" || a.alg == "isd-wagner") {
        IsdConfig cfg;
        cfg.p = a.p;
        cfg.ell = a.ell;
        cfg.sub = a.alg == "isd-wagner" ? IsdConfig::Sub::wagner : IsdConfig::Sub::dumer;
        cfg.list_size = a.list_size;
        cfg.depth = a.depth;
        cfg.seed = a.seed;
        cfg.workers = a.workers;
        cfg.max_iterations = a.max_iters;
        report = isd(inst, cfg);
    } else {
        throw CLI::ValidationError("--alg", "unknown algorithm " + a.alg);
    }
    // answers are re-checked through the instance predicate before ok=1
    std::erase_if(report.solutions, [&](const FqVector& e) { return !verify(inst, e); });
    report.success = !report.solutions.empty();
    print_report(out, report, a.all);
    return report.success ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"syndrome decoding toolbox"};
    app.require_subcommand(1);
    std::ostringstream unused;

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a decoding instance (.dpi)");
    gen->add_option("--n", gen_args.n)->required();
    gen->add_option("--R", gen_args.rate)->required();
    gen->add_option("--tau", gen_args.tau)->required();
    gen->add_option("--q", gen_args.q)->default_val(2);
    gen->add_option("--seed", gen_args.seed)->default_val(0);
    gen->add_option("--out", gen_args.out_path)->required();

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "run a decoder on an instance");
    solve->add_option("--alg", solve_args.alg)->required();
    solve->add_option("--instance", solve_args.instance_path);
    solve->add_option("--p", solve_args.p);
    solve->add_option("--ell", solve_args.ell);
    solve->add_option("--a", solve_args.depth);
    std::int64_t list_size_opt = -1;
    solve->add_option("--list-size", list_size_opt);
    solve->add_flag("--all", solve_args.all);
    solve->add_option("--seed", solve_args.seed)->default_val(0);
    solve->add_option("--workers", solve_args.workers)->default_val(1);
    solve->add_option("--max-iters", solve_args.max_iters)->default_val(0);
    solve->add_option("--q", solve_args.q);
    solve->add_option("--k", solve_args.k);
    solve->add_option("--x", solve_args.xs);
    solve->add_option("--z", solve_args.zs);
    solve->add_option("--y", solve_args.ys);

    auto* stats_cmd = app.add_subcommand("stats", "random-code statistics");
    stats_cmd->require_subcommand(1);
    std::size_t st_n = 0, st_k = 0, st_t = 0, st_samples = 0;
    unsigned st_q = 2;
    double st_rate = 0.5, st_a = 0.0, st_eps = 0.5;
    std::uint64_t st_seed = 0;
    auto* st_gv = stats_cmd->add_subcommand("gv", "Gilbert-Varshamov distance");
    st_gv->add_option("--n", st_n)->required();
    st_gv->add_option("--k", st_k)->required();
    st_gv->add_option("--q", st_q)->default_val(2);
    auto* st_tau = stats_cmd->add_subcommand("tau", "relative GV bounds");
    st_tau->add_option("--q", st_q)->default_val(2);
    st_tau->add_option("--R", st_rate)->required();
    auto* st_exp = stats_cmd->add_subcommand("expected", "expected solution count");
    st_exp->add_option("--n", st_n)->required();
    st_exp->add_option("--k", st_k)->required();
    st_exp->add_option("--t", st_t)->required();
    st_exp->add_option("--q", st_q)->default_val(2);
    st_exp->add_option("--a", st_a);
    auto* st_lhl = stats_cmd->add_subcommand("lhl", "leftover-hash bound");
    st_lhl->add_option("--n", st_n)->required();
    st_lhl->add_option("--k", st_k)->required();
    st_lhl->add_option("--t", st_t)->required();
    st_lhl->add_option("--q", st_q)->default_val(2);
    st_lhl->add_option("--samples", st_samples);
    st_lhl->add_option("--seed", st_seed)->default_val(0);
    auto* st_md = stats_cmd->add_subcommand("mindist", "minimum-distance concentration");
    st_md->add_option("--n", st_n)->required();
    st_md->add_option("--R", st_rate)->required();
    st_md->add_option("--q", st_q)->default_val(2);
    st_md->add_option("--eps", st_eps)->default_val(0.5);
    st_md->add_option("--samples", st_samples)->default_val(100);
    st_md->add_option("--seed", st_seed)->default_val(0);

    std::string ex_alg, ex_range, ex_out, ex_base = "q";
    unsigned ex_q = 2;
    double ex_rate = 0.5, ex_tau = -1.0;
    auto* exponent = app.add_subcommand("exponent", "asymptotic complexity exponents");
    exponent->add_option("--alg", ex_alg)->required();
    exponent->add_option("--q", ex_q)->required();
    exponent->add_option("--R", ex_rate)->required();
    exponent->add_option("--tau", ex_tau);
    exponent->add_option("--tau-range", ex_range);
    exponent->add_option("--base", ex_base)
        ->default_val("q")
        ->check(CLI::IsMember({"2", "q"}));
    exponent->add_option("--out", ex_out);

    std::string red_in, red_out;
    auto* reduce_cmd = app.add_subcommand("reduce", "problem reductions");
    reduce_cmd->require_subcommand(1);
    auto* red_3dm = reduce_cmd->add_subcommand("3dm", "three-dimensional matching to decoding");
    red_3dm->add_option("--in", red_in)->required();
    red_3dm->add_option("--out", red_out)->required();

    std::size_t lpn_k = 0, lpn_n = 0;
    double lpn_tau = 0.0;
    std::uint64_t lpn_seed = 0;
    std::string lpn_out;
    bool lpn_white = false;
    auto* lpn = app.add_subcommand("lpn", "noisy inner-product samples");
    lpn->require_subcommand(1);
    auto* lpn_gen = lpn->add_subcommand("gen", "collect samples into an instance");
    lpn_gen->add_option("--k", lpn_k)->required();
    lpn_gen->add_option("--tau", lpn_tau)->required();
    lpn_gen->add_option("--n", lpn_n)->required();
    lpn_gen->add_option("--seed", lpn_seed)->default_val(0);
    lpn_gen->add_option("--out", lpn_out)->required();
    lpn_gen->add_flag("--white-box", lpn_white);

    std::string bench_alg = "prange";
    std::size_t bench_n = 0;
    double bench_rate = 0.5, bench_tau = 0.1;
    unsigned bench_q = 2;
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "median-of-5 solver timing");
    bench->add_option("--alg", bench_alg);
    bench->add_option("--n", bench_n)->required();
    bench->add_option("--R", bench_rate)->default_val(0.5);
    bench->add_option("--tau", bench_tau)->default_val(0.1);
    bench->add_option("--q", bench_q)->default_val(2);
    bench->add_option("--seed", bench_seed)->default_val(0);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    out.precision(12);
    try {
        if (*gen) {
            DecodingInstance inst =
                gen_dp(FieldCtx(gen_args.q), gen_args.n, gen_args.rate, gen_args.tau, gen_args.seed);
            write_dpi_file(inst, gen_args.out_path);
            out << "WROTE " << gen_args.out_path << '\n';
            return 0;
        }
        if (*solve) {
            if (list_size_opt >= 0) solve_args.list_size = static_cast<std::size_t>(list_size_opt);
            return do_solve(solve_args, out);
        }
        if (*st_gv) {
            out << "t_gv " << gv_distance(st_n, st_k, st_q) << '\n';
            return 0;
        }
        if (*st_tau) {
            out << "tau_minus " << tau_minus(st_q, st_rate) << '\n';
            const double limit = 1.0 - std::log(st_q - 1.0) / std::log(double(st_q));
            if (st_rate <= limit) out << "tau_plus " << tau_plus(st_q, st_rate) << '\n';
            return 0;
        }
        if (*st_exp) {
            mpq_class expected = expected_solutions(st_n, st_k, st_t, st_q);
            out << "expected " << expected.get_str() << '\n';
            out << "expected_real " << expected.get_d() << '\n';
            if (st_a > 0.0) {
                MomentBounds mb = moment_bounds(st_n, st_k, st_t, st_q, st_a);
                out << "markov " << mb.markov << '\n';
                out << "chebyshev " << mb.chebyshev << '\n';
            }
            return 0;
        }
        if (*st_lhl) {
            out << "lhl_bound " << lhl_bound(st_n, st_k, st_t, st_q) << '\n';
            if (st_samples > 0)
                out << "lhl_empirical " << lhl_empirical(st_n, st_k, st_t, st_q, st_samples, st_seed)
                    << '\n';
            return 0;
        }
        if (*st_md) {
            out << "fraction "
                << min_distance_concentration(st_n, st_rate, st_q, st_eps, st_samples, st_seed)
                << '\n';
            return 0;
        }
        if (*exponent) {
            const bool base2 = ex_base == "2";
            if (!ex_range.empty()) {
                double lo, hi, step;
                char c1, c2;
                std::istringstream is(ex_range);
                if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':')
                    throw CLI::ValidationError("--tau-range", "expected lo:hi:step");
                ExponentCurve curve = emit_curve(ex_alg, ex_q, ex_rate, lo, hi, step, base2);
                if (ex_out.empty()) throw CLI::ValidationError("--out", "required for a range");
                std::ofstream f(ex_out, std::ios::binary);
                f << render_curve_csv(curve);
                out << "WROTE " << ex_out << " points=" << curve.points.size() << '\n';
                return 0;
            }
            if (ex_tau <= 0.0) throw CLI::ValidationError("--tau", "required without --tau-range");
            ExponentCurve curve = emit_curve(ex_alg, ex_q, ex_rate, ex_tau, ex_tau, 1.0, base2);
            if (curve.points.empty()) {
                err << "infeasible parameters for " << ex_alg << '\n';
                return 3;
            }
            out << "tau " << curve.points[0].tau << '\n';
            out << "exponent " << curve.points[0].exponent << '\n';
            for (std::size_t i = 0; i < curve.param_names.size(); ++i)
                out << curve.param_names[i] << ' ' << curve.points[0].params[i] << '\n';
            return 0;
        }
        if (*red_3dm) {
            std::ifstream in(red_in);
            if (!in) throw Error("cannot open: " + red_in);
            ThreeDmInstance tdm = parse_3dm(in);
            write_dpi_file(tdm_decoding_instance(tdm), red_out);
            out << "WROTE " << red_out << '\n';
            return 0;
        }
        if (*lpn_gen) {
            LpnOracle oracle(lpn_k, lpn_tau, lpn_seed);
            LpnCollection coll = lpn_collect(oracle, lpn_n, lpn_white);
            write_dpi_file(noisy_to_syndrome(coll.inst), lpn_out);
            out << "WROTE " << lpn_out << '\n';
            return 0;
        }
        if (*bench) {
            std::vector<double> times;
            for (std::uint64_t i = 0; i < 5; ++i) {
                DecodingInstance inst =
                    gen_dp(FieldCtx(bench_q), bench_n, bench_rate, bench_tau, bench_seed + i);
                PrangeConfig pc;
                IsdConfig ic;
                SolveReport report;
                if (bench_alg == "prange") {
                    pc.seed = bench_seed + i;
                    report = prange(inst, pc);
                } else if (bench_alg == "dumer") {
                    DumerConfig dc;
                    dc.seed = bench_seed + i;
                    report = dumer(inst, dc);
                } else {
                    throw CLI::ValidationError("--alg", "bench supports prange|dumer");
                }
                times.push_back(report.time_ms);
            }
            std::sort(times.begin(), times.end());
            out << "BENCH alg=" << bench_alg << " n=" << bench_n << " median_ms="
                << static_cast<std::uint64_t>(times[2]) << '\n';
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const DepthInfeasibleError& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const RankDeficientError& e) {
        err << e.what() << '\n';
        return 1;  // inconsistent system: nothing to find
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace sdt
