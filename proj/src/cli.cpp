/*
   Copyright 2026 The polymod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polymod/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stop_token>
#include <thread>

#include "CLI11.hpp"
#include "polymod/error.hpp"
#include "polymod/json_io.hpp"
#include "polymod/l_engine.hpp"
#include "polymod/nonclosed.hpp"

namespace polymod::cli {

using nlohmann::json;

namespace {

struct Output {
    json data;
    std::string human;
};

using Work = std::function<Output(std::stop_token)>;

// ---- input ----

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// Inline JSON when the argument opens like JSON, otherwise a file path.
json load_json(const std::string& arg) {
    std::string text = trim(arg);
    if (text.empty() || (text.front() != '{' && text.front() != '[')) {
        std::ifstream in(text);
        if (!in) throw Error(ErrorKind::Parse, "cannot read input file '" + text + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
}

// A coefficient given as a rational string or as JSON.
CoeffQ load_coeff(const std::string& arg) {
    const std::string text = trim(arg);
    if (!text.empty() && text.front() == '{') return parse_coeff(load_json(text));
    return CoeffQ(parse_rational(text));
}

// ---- human rendering ----

std::string render_poly(const BiPoly& f) {
    std::ostringstream os;
    os << "F(x,y) = " << to_string(f) << "\n";
    os << "coordinates (F = sum_n [F]_n(x) y^n/n!):\n";
    if (f.is_zero()) os << "  (none)\n";
    for (std::size_t n = 0; n < f.coord_count(); ++n) os << "  [F]_" << n << " = " << to_string(f.coord(n)) << "\n";
    return os.str();
}

std::string render_polys(const std::vector<BiPoly>& fs) {
    std::ostringstream os;
    os << "dim = " << fs.size() << "\n";
    for (std::size_t k = 0; k < fs.size(); ++k) os << "  " << k << ": " << to_string(fs[k]) << "\n";
    return os.str();
}

std::string render_tuple(const std::vector<UniPoly>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + to_string(t[i]);
    return out + ")";
}

std::string render_membership(const Membership& m) {
    std::ostringstream os;
    os << "contains: " << (m.member ? "true" : "false") << "\nreason: " << m.reason << "\n";
    if (m.index) os << "index: " << *m.index << "\n";
    if (m.degree) os << "degree: " << to_string(*m.degree) << "\n";
    if (m.residual) os << "residual: " << to_string(*m.residual) << "\n";
    if (m.sum_residual) os << "sum residual: " << to_string(*m.sum_residual) << "\n";
    if (m.truncation) os << "truncation: " << *m.truncation << "\n";
    if (!m.exact) os << "exact: false\n";
    return os.str();
}

std::string dec(const Real& v) { return decimal(v, 12); }

json witness_json(const nonclosed::Witness& w) {
    json j{{"member", w.member}};
    if (!w.member) {
        j["index"] = w.index;
        j["residual_degree"] = *w.residual_degree;
        j["residual_leading_coeff"] = *w.residual_leading_coeff;
    }
    return j;
}

// ---- execution ----

Output execute(const Work& work, double timeout_seconds) {
    if (timeout_seconds <= 0) return work(std::stop_token{});
    std::promise<Output> promise;
    auto future = promise.get_future();
    std::jthread worker([&](std::stop_token stop) {
        try {
            promise.set_value(work(stop));
        } catch (...) {
            promise.set_exception(std::current_exception());
        }
    });
    const auto deadline = std::chrono::duration<double>(timeout_seconds);
    if (future.wait_for(deadline) == std::future_status::timeout) {
        worker.request_stop();
        worker.join();
        throw Error(ErrorKind::Cancelled, "timed out", {{"timeout_seconds", timeout_seconds}});
    }
    return future.get();
}

json error_json(const Error& e) {
    return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"detail", e.detail()}}}};
}

int positive_bound(const std::optional<int>& given, int fallback) {
    const int v = given.value_or(fallback);
    if (v < 1) throw Error(ErrorKind::InvalidArgument, "deg-bound must be positive", {{"deg_bound", v}});
    return v;
}

int max_degree(const std::vector<BiPoly>& fs) {
    int out = 0;
    for (const auto& f : fs) {
        if (!deg_x(f).is_neg_inf()) out = std::max(out, deg_x(f).value());
        if (!deg_y(f).is_neg_inf()) out = std::max(out, deg_y(f).value());
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact algebra of translation-invariant polynomial modules", "polymod"};
    app.require_subcommand(1);
    app.fallthrough();

    bool want_json = false;
    bool want_human = false;
    std::optional<int> deg_bound;
    double timeout = 0;
    auto* json_flag = app.add_flag("--json", want_json, "JSON output");
    app.add_flag("--human", want_human, "human-readable output")->excludes(json_flag);
    app.add_option("--deg-bound", deg_bound, "degree truncation")->envname("POLYMOD_DEG_BOUND");
    app.add_option("--timeout", timeout, "seconds before the run is cancelled")->check(CLI::NonNegativeNumber);

    Work work;
    bool table_default = false;
    std::string a1, a2, a3;
    int s_arg = 1;
    int diff_order = 1;
    int n_min = 5;
    int n_max = 25;
    int e14_max = 20;
    bool serial = false;

    auto* eval_cmd = app.add_subcommand("poly-eval", "evaluate F at (x, y)");
    eval_cmd->add_option("--poly", a1, "BiPoly JSON")->required();
    eval_cmd->add_option("--x", a2, "coefficient")->required();
    eval_cmd->add_option("--y", a3, "coefficient")->required();
    eval_cmd->callback([&] {
        work = [&](std::stop_token) {
            const CoeffQ v = eval(parse_bipoly(load_json(a1)), load_coeff(a2), load_coeff(a3));
            return Output{json{{"value", v}}, "value = " + to_string(v) + "\n"};
        };
    });

    auto* shift_cmd = app.add_subcommand("poly-shift", "F(x + a, y + b)");
    shift_cmd->add_option("--poly", a1, "BiPoly JSON")->required();
    shift_cmd->add_option("--a", a2, "x offset")->required();
    shift_cmd->add_option("--b", a3, "y offset")->required();
    shift_cmd->callback([&] {
        work = [&](std::stop_token) {
            const BiPoly g = shift(parse_bipoly(load_json(a1)), load_coeff(a2), load_coeff(a3));
            return Output{json(g), render_poly(g)};
        };
    });

    auto* diff_cmd = app.add_subcommand("poly-diff", "partial derivative");
    diff_cmd->add_option("--poly", a1, "BiPoly JSON")->required();
    diff_cmd->add_option("--var", a2, "x or y")->required()->check(CLI::IsMember({"x", "y"}));
    diff_cmd->add_option("--order", diff_order, "number of derivatives")->check(CLI::NonNegativeNumber);
    diff_cmd->callback([&] {
        work = [&](std::stop_token) {
            BiPoly g = parse_bipoly(load_json(a1));
            for (int k = 0; k < diff_order; ++k) g = a2 == "x" ? d_dx(g) : d_dy(g);
            return Output{json(g), render_poly(g)};
        };
    });

    auto* closure_cmd = app.add_subcommand("closure", "derivative closure of generators");
    closure_cmd->add_option("--gens", a1, "array of BiPoly")->required();
    closure_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const auto basis = derivative_closure(parse_bipoly_list(load_json(a1)), stop);
            return Output{json{{"dim", basis.size()}, {"basis", basis}}, render_polys(basis)};
        };
    });

    auto* member_cmd = app.add_subcommand("member", "module membership with certificate");
    member_cmd->add_option("--module", a1, "ModuleExpr JSON")->required();
    member_cmd->add_option("--poly", a2, "BiPoly JSON")->required();
    member_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const ModuleExpr m = parse_module(load_json(a1));
            const BiPoly f = parse_bipoly(load_json(a2));
            std::optional<int> bound;
            if (deg_bound) bound = positive_bound(deg_bound, 1);
            const Membership r = contains(m, f, bound, stop);
            return Output{json(r), render_membership(r)};
        };
    });

    auto* vspace_cmd = app.add_subcommand("vspace", "initial coordinate tuples of a module");
    vspace_cmd->add_option("--module", a1, "ModuleExpr JSON")->required();
    vspace_cmd->add_option("--s", s_arg, "tuple length")->required()->check(CLI::PositiveNumber);
    vspace_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const ModuleExpr m = parse_module(load_json(a1));
            const int bound = positive_bound(deg_bound, std::max(default_deg_bound(m, BiPoly{}), s_arg + 1));
            const VSpaceBasis v = v_space(m, s_arg, bound, stop);
            std::ostringstream os;
            os << "s = " << v.s << ", deg_bound = " << v.deg_bound << ", dim = " << v.basis.size()
               << (v.exact ? "" : " (truncated)") << "\n";
            for (const auto& t : v.basis) os << "  " << render_tuple(t) << "\n";
            return Output{json(v), os.str()};
        };
    });

    auto* gen_cmd = app.add_subcommand("gen-gamma", "element of M_Gamma from its seeds");
    gen_cmd->add_option("--gamma", a1, "GammaTable JSON")->required();
    gen_cmd->add_option("--seeds", a2, "array of UniPoly")->required();
    gen_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const BiPoly g = generate(parse_gamma(load_json(a1)), parse_unipoly_list(load_json(a2)), stop);
            return Output{json(g), render_poly(g)};
        };
    });

    auto* infer_cmd = app.add_subcommand("infer-l", "recover L from a basis of an L-module");
    infer_cmd->add_option("--basis", a1, "array of BiPoly")->required();
    infer_cmd->add_option("--s", s_arg, "order")->required()->check(CLI::PositiveNumber);
    infer_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const auto basis = parse_bipoly_list(load_json(a1));
            const int bound = positive_bound(deg_bound, std::max(max_degree(basis), s_arg) + 1);
            const GammaTable g = infer_L(basis, s_arg, bound, stop);
            std::ostringstream os;
            os << "s = " << g.order() << ", deg_bound = " << bound << "\n";
            for (const auto& [key, a] : g.entries())
                os << "  a(" << key.first << "," << key.second << ") = " << to_string(a) << "\n";
            return Output{json{{"gamma", g}, {"deg_bound", bound}}, os.str()};
        };
    });

    auto* order_cmd = app.add_subcommand("order", "order of the module spanned by a basis");
    order_cmd->add_option("--basis", a1, "array of BiPoly")->required();
    order_cmd->callback([&] {
        work = [&](std::stop_token) {
            const auto basis = parse_bipoly_list(load_json(a1));
            const int bound = positive_bound(deg_bound, max_degree(basis) + 1);
            const auto k = order_of_module(basis, bound);
            json j{{"order", k ? json(*k) : json(nullptr)}, {"deg_bound", bound}};
            return Output{j, "order = " + (k ? std::to_string(*k) : std::string("none")) +
                                 " (deg_bound = " + std::to_string(bound) + ")\n"};
        };
    });

    auto* osum_cmd = app.add_subcommand("order-sum", "order of M_g1 + M_g2");
    osum_cmd->add_option("--gamma1", a1, "GammaTable JSON")->required();
    osum_cmd->add_option("--gamma2", a2, "GammaTable JSON")->required();
    osum_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const GammaTable g1 = parse_gamma(load_json(a1));
            const GammaTable g2 = parse_gamma(load_json(a2));
            const int bound = positive_bound(deg_bound, g1.order() + g2.order() + 2);
            const SumOrderReport r = order_of_sum(g1, g2, bound, stop);
            std::ostringstream os;
            os << "order = " << r.order << " (deg_bound = " << r.deg_bound << ", coordinates compared = "
               << r.compared_coords << ", sum dim = " << r.sum_dim << ")\n";
            return Output{json(r), os.str()};
        };
    });

    auto* chains_cmd = app.add_subcommand("chains", "cyclic basis of a nilpotent matrix");
    chains_cmd->add_option("--matrix", a1, "array of rows")->required();
    chains_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const Matrix d = parse_matrix(load_json(a1));
            const ChainDecomposition c = nilpotent_chains(d, stop);
            const bool ok = reconstruct(c) == d;
            json j = c;
            j["reconstructs"] = ok;
            std::ostringstream os;
            os << "dim = " << c.dim << ", chain lengths:";
            for (const auto& ch : c.chains) os << " " << ch.length;
            os << "\nreconstructs D: " << (ok ? "yes" : "no") << "\n";
            return Output{j, os.str()};
        };
    });

    auto* split_cmd = app.add_subcommand("split", "recover (d, order) of Sum(Md, MGamma)");
    split_cmd->add_option("--module", a1, "ModuleExpr JSON")->required();
    split_cmd->callback([&] {
        work = [&](std::stop_token stop) {
            const SplitResult r = canonical_split(parse_module(load_json(a1)), stop);
            return Output{json{{"d", r.d}, {"order", r.order}},
                          "d = " + std::to_string(r.d) + ", order = " + std::to_string(r.order) + "\n"};
        };
    });

    auto* demo_cmd = app.add_subcommand("nonclosed-demo", "log-scale bound on sup |G_n - x|");
    demo_cmd->add_option("--n-min", n_min, "first n")->check(CLI::PositiveNumber);
    demo_cmd->add_option("--n-max", n_max, "last n")->check(CLI::PositiveNumber);
    demo_cmd->add_flag("--serial", serial, "disable the parallel sweep");
    demo_cmd->callback([&] {
        table_default = true;
        work = [&](std::stop_token stop) {
            const auto reports = nonclosed::sweep(n_min, n_max, serial ? Exec::serial : Exec::parallel, stop);
            bool decreasing = true;
            for (std::size_t k = 1; k < reports.size(); ++k)
                if (!(reports[k].log_total.log_mag() < reports[k - 1].log_total.log_mag())) decreasing = false;
            const int n0 = nonclosed::empirical_n0(n_max);
            const auto witness = nonclosed::witness_x_not_in_m();

            json rows = json::array();
            std::ostringstream os;
            os << std::left << std::setw(4) << "n" << std::setw(22) << "log10_linear" << std::setw(22) << "log10_tail"
               << std::setw(22) << "log10_total"
               << "certified\n";
            for (const auto& r : reports) {
                rows.push_back({{"n", r.n},
                                {"log10_linear", dec(r.log_linear_term.log10_mag())},
                                {"log10_tail", dec(r.log_tail_term.log10_mag())},
                                {"log10_total", dec(r.log_total.log10_mag())},
                                {"certified", r.certified},
                                {"limit_chain", r.limit_chain}});
                os << std::setw(4) << r.n << std::setw(22) << dec(r.log_linear_term.log10_mag()) << std::setw(22)
                   << dec(r.log_tail_term.log10_mag()) << std::setw(22) << dec(r.log_total.log10_mag())
                   << (r.certified ? "true" : "false") << "\n";
            }
            os << "log10_total strictly decreasing: " << (decreasing ? "yes" : "no") << "\n";
            os << "side conditions hold for n > " << n0 << "\n";
            os << "x not in M: [F]_1 must equal L(x) = 1, residual degree 0\n";
            json j{{"scale", "log10, upper bounds"},
                   {"rows", rows},
                   {"strictly_decreasing", decreasing},
                   {"n0", n0},
                   {"witness_x", witness_json(witness)}};
            return Output{j, os.str()};
        };
    });

    auto* e14_cmd = app.add_subcommand("e14", "ln(e_3(n-1)^e(n) / e_3(n)) for n = 2..n_max");
    e14_cmd->add_option("--n-max", e14_max, "last n")->check(CLI::PositiveNumber);
    e14_cmd->callback([&] {
        table_default = true;
        work = [&](std::stop_token) {
            const auto r = nonclosed::verify_e14(e14_max);
            json rows = json::array();
            std::ostringstream os;
            os << std::left << std::setw(4) << "n" << "ln_ratio\n";
            for (const auto& row : r.rows) {
                rows.push_back({{"n", row.n}, {"ln_ratio", decimal(row.log_ratio, 20)}});
                os << std::setw(4) << row.n << decimal(row.log_ratio, 20) << "\n";
            }
            os << "strictly decreasing: " << (r.strictly_decreasing ? "yes" : "no") << "\n";
            json j{{"scale", "natural log"},
                   {"rows", rows},
                   {"strictly_decreasing", r.strictly_decreasing},
                   {"negative_from", r.negative_from ? json(*r.negative_from) : json(nullptr)},
                   {"negative_onward", r.negative_onward}};
            return Output{j, os.str()};
        };
    });

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const bool as_json = want_json || (!want_human && !table_default);
    try {
        Output result = execute(work, timeout);
        if (as_json) out << result.data.dump(2) << "\n";
        else out << result.human;
        return exit_ok;
    } catch (const Error& e) {
        out << error_json(e).dump(2) << "\n";
        err << "polymod: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? exit_usage : exit_domain;
    }
}

}  // namespace polymod::cli
