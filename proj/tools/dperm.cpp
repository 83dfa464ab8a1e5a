#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dperm/cfrac.hpp"
#include "dperm/families.hpp"
#include "dperm/paths.hpp"
#include "dperm/perm.hpp"
#include "dperm/stats.hpp"
#include "dperm/verify.hpp"

using namespace dperm;

namespace {

struct Args {
    int n = -1, n_max = -1, order = 8, depth = -1, cap = 7;
    std::string cls = "all", family_id, labels = "xi", mode = "auto", name, perm, path, values, kind = "T";
    std::string alpha, delta, gamma, beta, moments, id;
    std::uint64_t seed = kDefaultSeed;
    bool json = false, bfile = false, no_timing = false, odd = false;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> tokens(const std::string& s) {
    std::string t = s;
    for (char& c : t)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream in(t);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<Poly> poly_list(const std::string& s) {
    std::vector<Poly> out;
    for (const auto& w : tokens(s)) out.emplace_back(mpz_class(w));
    return out;
}

std::vector<mpq_class> rational_list(const std::string& s) {
    std::vector<mpq_class> out;
    for (const auto& w : tokens(s)) {
        mpq_class q(w);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::string joined(const std::vector<Poly>& v) {
    std::string s;
    for (const auto& p : v) s += (s.empty() ? "" : " ") + p.str();
    return s;
}

LabelVariant variant(const std::string& s) {
    if (s == "xi") return LabelVariant::Xi;
    if (s == "xihat") return LabelVariant::XiHat;
    throw Usage("--labels must be xi, xihat or biane");
}

Path parse_path(const std::string& s) {
    Path p;
    p.kind = PathKind::AlmostDyck;
    for (char c : s) {
        if (c == 'U') p.steps.push_back(Step::Rise);
        else if (c == 'D') p.steps.push_back(Step::Fall);
        else if (c == 'L') {
            p.steps.push_back(Step::LongLevel);
            p.kind = PathKind::ZeroSchroeder;
        } else if (c != ' ') throw Usage("path letters are U, D, L");
    }
    return p;
}

std::string label_str(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string label_str(const std::vector<PairLabel>& v) {
    std::string s;
    for (auto [a, b] : v) s += (s.empty() ? "" : " ") + std::to_string(a) + ":" + std::to_string(b);
    return s;
}

int need_n(const Args& a) {
    if (a.n < 0) throw Usage("--n is required");
    if (a.n > a.cap) throw Usage("--n " + std::to_string(a.n) + " exceeds --cap " + std::to_string(a.cap));
    return a.n;
}

int cmd_enumerate(const Args& a) {
    for_each_d_permutation(need_n(a), parse_class(a.cls), [](const Permutation& p) { std::cout << p.str() << "\n"; });
    return 0;
}

int cmd_stats(const Args& a) {
    if (!a.perm.empty()) {
        Permutation p = Permutation::parse(a.perm);
        if (!is_d_permutation(p)) throw Usage("not a D-permutation: " + a.perm);
        auto idx = index_stats(p);
        std::cout << "i,value,cycle,record,ucross,unest,lcross,lnest,psnest,ucross',unest',lcross',lnest'\n";
        for (int i = 1; i <= p.size(); ++i) {
            const auto& x = idx[i];
            std::cout << i << "," << p(i) << "," << cycle_type_name(x.cls.cycle) << "," << record_type_name(x.cls.record)
                      << "," << x.ucross << "," << x.unest << "," << x.lcross << "," << x.lnest << "," << x.psnest << ","
                      << x.ucross_p << "," << x.unest_p << "," << x.lcross_p << "," << x.lnest_p << "\n";
        }
        std::cout << "cycles," << cycle_count(p) << "\n";
        return 0;
    }
    std::cout << "n,dc,deo,de,de_union_do,dpure,d\n";
    for (int n = 0; n <= need_n(a); ++n) {
        ClassCounts c = class_counts(n);
        std::cout << n << "," << c.dc << "," << c.deo << "," << c.de << "," << c.de_union_do << "," << c.dpure << "," << c.d
                  << "\n";
    }
    return 0;
}

int cmd_poly(const Args& a) {
    if (a.family_id.empty()) throw Usage("--family is required");
    const Family& f = family(a.family_id);
    Poly p = build_polynomial(f, need_n(a), make_vars());
    std::cout << p.str() << "\n";
    return 0;
}

CFSpec spec_from_args(const Args& a) {
    if (a.kind == "S") return CFSpec::S(poly_list(a.alpha));
    if (a.kind == "T") return CFSpec::T(poly_list(a.alpha), poly_list(a.delta));
    if (a.kind == "J") return CFSpec::J(poly_list(a.gamma), poly_list(a.beta));
    throw Usage("--kind must be S, T or J");
}

int cmd_cf(const std::string& sub, const Args& a) {
    if (sub == "sequences") {
        if (a.name.empty()) throw Usage("--name is required");
        if (a.n < 0) throw Usage("--n is required");
        auto s = classical_sequence(a.name, a.n);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (a.bfile) std::cout << i << " " << s[i] << "\n";
            else std::cout << (i ? "," : "") << s[i];
        }
        if (!a.bfile) std::cout << "\n";
        return 0;
    }
    if (sub == "expand") {
        CFSpec s = spec_from_args(a);
        int depth = a.depth >= 0 ? a.depth : std::min(a.order, s.depth());
        Series ser = expand(s, a.order, depth);
        for (int n = 0; n <= a.order; ++n) std::cout << (a.bfile ? std::to_string(n) + " " : "") << ser[n].str() << "\n";
        return 0;
    }
    if (sub == "contract") {
        auto al = poly_list(a.alpha), de = poly_list(a.delta);
        de.resize(al.size());
        if (a.odd) {
            OddContraction o = contract_odd(al, de);
            std::cout << "lead " << o.lead.str() << "\ngamma " << joined(o.j.gamma) << "\nbeta " << joined(o.j.beta) << "\n";
        } else {
            JCoeffs j = contract_even(al, de);
            std::cout << "gamma " << joined(j.gamma) << "\nbeta " << joined(j.beta) << "\n";
        }
        return 0;
    }
    if (sub == "from-moments") {
        auto m = rational_list(a.moments);
        int depth = a.depth >= 0 ? a.depth : static_cast<int>(m.size()) / 2 - 1;
        JRational j = jfraction_from_moments(m, depth);
        std::cout << "gamma";
        for (const auto& g : j.gamma) std::cout << " " << to_string(g);
        std::cout << "\nbeta";
        for (const auto& b : j.beta) std::cout << " " << to_string(b);
        std::cout << "\n";
        return 0;
    }
    throw Usage("cf needs expand, contract, from-moments or sequences");
}

int cmd_bijection(const std::string& sub, const Args& a) {
    const bool biane = a.labels == "biane";
    if (!biane) variant(a.labels);
    if (sub == "forward") {
        Permutation p = Permutation::parse(a.perm);
        if (!is_d_permutation(p)) throw Usage("not a D-permutation: " + a.perm);
        Path path = fz_path(p);
        std::cout << "path " << path.str() << "\n";
        std::cout << "schroeder " << psi(path).str() << "\n";
        std::cout << "labels " << (biane ? label_str(biane_labels(p)) : label_str(fz_labels(p, variant(a.labels)))) << "\n";
        return 0;
    }
    if (sub == "inverse") {
        Path path = parse_path(a.path);
        if (path.kind == PathKind::ZeroSchroeder) path = psi_inverse(path);
        if (biane) {
            std::vector<PairLabel> lab;
            for (const auto& w : tokens(a.values)) {
                auto bar = w.find(':');
                if (bar == std::string::npos) throw Usage("pair labels are written l:m");
                lab.emplace_back(std::stoi(w.substr(0, bar)), std::stoi(w.substr(bar + 1)));
            }
            BianeHistory h = biane_inverse(path, lab);
            std::cout << h.perm.str() << "\ncycles " << h.cycles << "\n";
        } else {
            std::vector<int> lab;
            for (const auto& w : tokens(a.values)) lab.push_back(std::stoi(w));
            std::cout << fz_inverse(path, lab, variant(a.labels)).str() << "\n";
        }
        return 0;
    }
    if (sub == "roundtrip") {
        long total = 0, bad = 0;
        for_each_d_permutation(need_n(a), parse_class(a.cls), [&](const Permutation& p) {
            ++total;
            Path path = fz_path(p);
            bool ok = biane ? biane_inverse(path, biane_labels(p)).perm == p
                            : fz_inverse(path, fz_labels(p, variant(a.labels)), variant(a.labels)) == p;
            ok = ok && psi_inverse(psi(path)) == path;
            if (!ok) {
                if (bad == 0) std::cerr << "roundtrip fails at " << p.str() << "\n";
                ++bad;
            }
        });
        std::cout << total << " permutations, " << bad << " failures\n";
        return bad ? 1 : 0;
    }
    throw Usage("bijection needs forward, inverse or roundtrip");
}

CheckOptions check_options(const Args& a) {
    CheckOptions o;
    o.n_max = a.n_max >= 0 ? a.n_max : a.n;
    if (o.n_max > a.cap) throw Usage("--nmax " + std::to_string(o.n_max) + " exceeds --cap " + std::to_string(a.cap));
    o.mode = a.mode;
    o.seed = a.seed;
    o.timing = !a.no_timing;
    return o;
}

void print_result(const CheckResult& r) {
    std::cout << r.id << ": " << r.status << (r.report_only ? " (report-only)" : "") << ", n<=" << r.n_max << ", "
              << r.mode;
    if (r.millis > 0) std::cout << ", " << std::llround(r.millis) << " ms";
    std::cout << "\n";
    for (const auto& d : r.details) std::cout << "  " << d << "\n";
}

int cmd_verify(const Args& a, bool all_json) {
    std::vector<std::string> ids;
    if (a.id == "all" || all_json) {
        for (const auto& c : check_catalog()) ids.push_back(c.id);
    } else {
        if (!is_check(a.id)) throw Usage("unknown check id: " + a.id);
        ids.push_back(a.id);
    }
    CheckOptions o = check_options(a);
    std::vector<CheckResult> rs;
    bool ok = true;
    for (const auto& id : ids) {
        rs.push_back(run_check(id, o));
        ok = ok && rs.back().ok();
        if (!a.json && !all_json) print_result(rs.back());
    }
    if (a.json || all_json) std::cout << (rs.size() == 1 && !all_json ? result_json(rs[0]) : report_json(rs)) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D-permutation statistics, continued fractions and bijections"};
    app.require_subcommand(1);
    Args a;
    auto common = [&](CLI::App* c) {
        c->add_option("--n", a.n, "size parameter n (permutations of 2n)");
        c->add_option("--nmax", a.n_max, "largest n checked");
        c->add_option("--class", a.cls, "all, esemi, osemi, derangement, cycle, pure");
        c->add_option("--family", a.family_id, "polynomial family id");
        c->add_option("--labels", a.labels, "xi, xihat or biane");
        c->add_option("--mode", a.mode, "auto, symbolic or specialized");
        c->add_option("--seed", a.seed, "base seed");
        c->add_option("--order", a.order, "series order");
        c->add_option("--depth", a.depth, "continued fraction depth");
        c->add_option("--cap", a.cap, "largest n enumerated exhaustively");
        c->add_flag("--json", a.json, "JSON output");
        c->add_flag("--bfile", a.bfile, "index value lines");
        c->add_flag("--no-timing", a.no_timing, "write 0 for timings");
    };
    auto* en = app.add_subcommand("enumerate", "list D-permutations of [2n]");
    auto* st = app.add_subcommand("stats", "class counts, or per-index statistics with --perm");
    auto* po = app.add_subcommand("poly", "generating polynomial of a family");
    auto* cf = app.add_subcommand("cf", "continued fraction tools");
    auto* bi = app.add_subcommand("bijection", "path bijections");
    auto* ve = app.add_subcommand("verify", "run a check, or all");
    auto* re = app.add_subcommand("report", "run every check and print a JSON report");
    for (auto* c : {en, st, po, cf, bi, ve, re}) common(c);
    st->add_option("--perm", a.perm, "one-line permutation");
    std::string cf_sub, bi_sub;
    cf->add_option("action", cf_sub, "expand, contract, from-moments, sequences")->required();
    cf->add_option("--name", a.name, "genocchi, median, hflat, euler, augmented_euler");
    cf->add_option("--kind", a.kind, "S, T or J");
    cf->add_option("--alpha", a.alpha);
    cf->add_option("--delta", a.delta);
    cf->add_option("--gamma", a.gamma);
    cf->add_option("--beta", a.beta);
    cf->add_option("--moments", a.moments, "rational moments m_0, m_1, ...");
    cf->add_flag("--odd", a.odd, "odd contraction");
    bi->add_option("action", bi_sub, "forward, inverse, roundtrip")->required();
    bi->add_option("--perm", a.perm, "one-line permutation");
    bi->add_option("--path", a.path, "path in U, D, L letters");
    bi->add_option("--values", a.values, "label values; pairs as l:m");
    ve->add_option("id", a.id, "check id or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*en) return cmd_enumerate(a);
        if (*st) return cmd_stats(a);
        if (*po) return cmd_poly(a);
        if (*cf) return cmd_cf(cf_sub, a);
        if (*bi) return cmd_bijection(bi_sub, a);
        if (*ve) return cmd_verify(a, false);
        if (*re) return cmd_verify(a, true);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
