#include "dperm/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dperm {

Permutation::Permutation(const std::vector<int>& one_line) {
    const int n = static_cast<int>(one_line.size());
    w_.assign(n + 1, 0);
    inv_.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int v = one_line[i - 1];
        if (v < 1 || v > n || inv_[v] != 0)
            throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
        w_[i] = v;
        inv_[v] = i;
    }
}

// Accepts "3142", "3 1 4 2" or "3,1,4,2". Digits run together only when every entry is < 10.
Permutation Permutation::parse(const std::string& s) {
    std::vector<int> out;
    bool sep = s.find_first_of(" ,") != std::string::npos;
    if (sep) {
        std::string t = s;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        int v;
        while (in >> v) out.push_back(v);
        if (!in.eof()) throw std::invalid_argument("bad permutation: " + s);
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad permutation: " + s);
            out.push_back(ch - '0');
        }
    }
    return Permutation(out);
}

Permutation Permutation::identity(int len) {
    std::vector<int> w(len);
    for (int i = 0; i < len; ++i) w[i] = i + 1;
    return Permutation(w);
}

std::string Permutation::str() const {
    std::string s;
    bool wide = size() >= 10;
    for (int i = 1; i <= size(); ++i) {
        if (wide && i > 1) s += ' ';
        s += std::to_string(w_[i]);
    }
    return s;
}

std::string Permutation::cycle_notation() const {
    std::vector<char> seen(size() + 1, 0);
    std::string s;
    for (int i = 1; i <= size(); ++i) {
        if (seen[i]) continue;
        s += '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) s += ',';
            s += std::to_string(j);
            first = false;
            j = w_[j];
        }
        s += ')';
    }
    return s;
}

DClass parse_class(const std::string& s) {
    if (s == "all" || s == "All") return DClass::All;
    if (s == "esemi" || s == "ESemi" || s == "e") return DClass::ESemi;
    if (s == "osemi" || s == "OSemi" || s == "o") return DClass::OSemi;
    if (s == "derangement" || s == "Derangement" || s == "eo") return DClass::Derangement;
    if (s == "cycle" || s == "Cycle") return DClass::Cycle;
    if (s == "pure" || s == "Pure") return DClass::Pure;
    throw std::invalid_argument("unknown class: " + s);
}

std::string class_name(DClass c) {
    switch (c) {
        case DClass::All: return "all";
        case DClass::ESemi: return "esemi";
        case DClass::OSemi: return "osemi";
        case DClass::Derangement: return "derangement";
        case DClass::Cycle: return "cycle";
        case DClass::Pure: return "pure";
    }
    return "?";
}

bool is_d_permutation(const Permutation& p) {
    if (p.size() % 2 != 0) throw std::invalid_argument("odd length permutation");
    for (int i = 1; i <= p.size(); ++i) {
        if (i % 2 == 1 && p(i) < i) return false;
        if (i % 2 == 0 && p(i) > i) return false;
    }
    return true;
}

int cycle_count(const Permutation& p) {
    std::vector<char> seen(p.size() + 1, 0);
    int c = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
    }
    return c;
}

bool is_record(const Permutation& p, int i) {
    for (int j = 1; j < i; ++j)
        if (p(j) > p(i)) return false;
    return true;
}

bool is_antirecord(const Permutation& p, int i) {
    for (int j = i + 1; j <= p.size(); ++j)
        if (p(j) < p(i)) return false;
    return true;
}

static bool has_rar(const Permutation& p) {
    const int N = p.size();
    std::vector<int> suffix_min(N + 2, N + 1);
    for (int i = N; i >= 1; --i) suffix_min[i] = std::min(suffix_min[i + 1], p(i));
    int pmax = 0;
    for (int i = 1; i <= N; ++i) {
        bool rec = p(i) > pmax;
        pmax = std::max(pmax, p(i));
        if (rec && p(i) < suffix_min[i + 1]) return true;
    }
    return false;
}

bool in_class(const Permutation& p, DClass c) {
    auto fixed_with_parity = [&](int par) {
        for (int i = 1; i <= p.size(); ++i)
            if (p(i) == i && i % 2 == par) return true;
        return false;
    };
    switch (c) {
        case DClass::All: return true;
        case DClass::ESemi: return !fixed_with_parity(0);
        case DClass::OSemi: return !fixed_with_parity(1);
        case DClass::Derangement: return !fixed_with_parity(0) && !fixed_with_parity(1);
        case DClass::Cycle: return p.size() > 0 && cycle_count(p) == 1;
        case DClass::Pure: return !has_rar(p);
    }
    return false;
}

Permutation reversal_conjugate(const Permutation& p) {
    const int N = p.size();
    std::vector<int> w(N);
    for (int i = 1; i <= N; ++i) w[i - 1] = N + 1 - p(N + 1 - i);
    return Permutation(w);
}

namespace {

struct Backtrack {
    int N;
    bool no_even_fix, no_odd_fix;
    DClass cls;
    const std::function<void(const Permutation&)>& fn;
    std::vector<int> word;
    std::vector<char> used;

    void run(int i) {
        if (i > N) {
            Permutation p(word);
            if (cls == DClass::Cycle || cls == DClass::Pure) {
                if (!in_class(p, cls)) return;
            }
            fn(p);
            return;
        }
        int lo = (i % 2 == 1) ? i : 1;
        int hi = (i % 2 == 1) ? N : i;
        for (int v = lo; v <= hi; ++v) {
            if (used[v]) continue;
            if (v == i && ((i % 2 == 0 && no_even_fix) || (i % 2 == 1 && no_odd_fix))) continue;
            used[v] = 1;
            word[i - 1] = v;
            run(i + 1);
            used[v] = 0;
        }
    }
};

}  // namespace

void for_each_d_permutation(int n, DClass c, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("negative n");
    bool ne = c == DClass::ESemi || c == DClass::Derangement || c == DClass::Cycle;
    bool no = c == DClass::OSemi || c == DClass::Derangement || c == DClass::Cycle;
    Backtrack bt{2 * n, ne, no, c, fn, std::vector<int>(2 * n), std::vector<char>(2 * n + 1, 0)};
    bt.run(1);
}

std::vector<Permutation> d_permutations(int n, DClass c) {
    std::vector<Permutation> out;
    for_each_d_permutation(n, c, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

ClassCounts class_counts(int n) {
    ClassCounts cc{};
    for_each_d_permutation(n, DClass::All, [&](const Permutation& p) {
        bool e = in_class(p, DClass::ESemi), o = in_class(p, DClass::OSemi);
        cc.d++;
        if (e) cc.de++;
        if (o) cc.d_o++;
        if (e && o) cc.deo++;
        if (e || o) cc.de_union_do++;
        if (in_class(p, DClass::Pure)) cc.dpure++;
        if (in_class(p, DClass::Cycle)) cc.dc++;
    });
    return cc;
}

}  // namespace dperm
