#include "dperm/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dperm {

int ceil_half(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

std::vector<int> Path::heights() const {
    std::vector<int> h{0};
    for (Step s : steps) {
        int c = h.back();
        switch (s) {
            case Step::Rise: h.push_back(c + 1); break;
            case Step::Fall: h.push_back(c - 1); break;
            case Step::LongLevel:
                h.push_back(c);
                h.push_back(c);
                break;
        }
    }
    return h;
}

int Path::length() const {
    int len = 0;
    for (Step s : steps) len += s == Step::LongLevel ? 2 : 1;
    return len;
}

bool Path::valid() const {
    auto h = heights();
    if (h.back() != 0) return false;
    const int floor = kind == PathKind::AlmostDyck ? -1 : 0;
    for (int x : h)
        if (x < floor) return false;
    int pos = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        Step s = steps[i];
        bool level = s == Step::LongLevel;
        switch (kind) {
            case PathKind::Dyck:
            case PathKind::AlmostDyck:
                if (level) return false;
                break;
            case PathKind::ZeroSchroeder:
                if (level && h[pos] != 0) return false;
                break;
            default: break;
        }
        if (kind == PathKind::AlmostDyck && s == Step::Fall && h[pos] == 0) {
            if (i + 1 >= steps.size() || steps[i + 1] != Step::Rise) return false;
        }
        pos += level ? 2 : 1;
    }
    return true;
}

std::string Path::str() const {
    std::string s;
    for (Step x : steps) s += x == Step::Rise ? 'U' : x == Step::Fall ? 'D' : 'L';
    return s;
}

Path fz_path(const Permutation& p) {
    Path path;
    path.kind = PathKind::AlmostDyck;
    for (int i = 1; i <= p.size(); ++i) path.steps.push_back(p.inv(i) % 2 == 0 ? Step::Rise : Step::Fall);
    return path;
}

Path psi(const Path& a) {
    if (a.kind != PathKind::AlmostDyck || !a.valid()) throw std::invalid_argument("psi needs an almost-Dyck path");
    Path out;
    out.kind = PathKind::ZeroSchroeder;
    int h = 0;
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i] == Step::Fall && h == 0) {
            out.steps.push_back(Step::LongLevel);
            ++i;
            continue;
        }
        out.steps.push_back(a.steps[i]);
        h += a.steps[i] == Step::Rise ? 1 : -1;
    }
    return out;
}

Path psi_inverse(const Path& s) {
    if (s.kind != PathKind::ZeroSchroeder || !s.valid())
        throw std::invalid_argument("psi_inverse needs a 0-Schroeder path");
    Path out;
    out.kind = PathKind::AlmostDyck;
    for (Step x : s.steps) {
        if (x == Step::LongLevel) {
            out.steps.push_back(Step::Fall);
            out.steps.push_back(Step::Rise);
        } else {
            out.steps.push_back(x);
        }
    }
    return out;
}

std::vector<int> fz_labels(const Permutation& p, LabelVariant v) {
    const int N = p.size();
    std::vector<int> xi(N, 0);
    for (int i = 1; i <= N; ++i) {
        int c = 0;
        if (i % 2 == 0) {
            for (int j = i + 1; j <= N; ++j)
                if (p(j) < p(i)) ++c;
        } else {
            for (int j = 1; j < i; ++j)
                if (p(j) > p(i)) ++c;
        }
        xi[i - 1] = c;
    }
    if (v == LabelVariant::Xi) return xi;
    std::vector<int> hat(N);
    for (int i = 1; i <= N; ++i) hat[i - 1] = xi[p.inv(i) - 1];
    return hat;
}

static void check_almost_dyck(const Path& path) {
    if (path.kind != PathKind::AlmostDyck || !path.valid())
        throw std::invalid_argument("expected a valid almost-Dyck path");
    if (path.length() % 2) throw std::invalid_argument("path length must be even");
}

int fz_label_bound(const Path& path, int i) {
    auto h = path.heights();
    int prev = h.at(i - 1);
    return path.steps.at(i - 1) == Step::Rise ? ceil_half(prev) : ceil_half(prev - 1);
}

static std::invalid_argument bad_label(int i, int got, int bound) {
    return std::invalid_argument("invalid label at step " + std::to_string(i) + ": " + std::to_string(got) +
                                 " not in [0," + std::to_string(bound) + "]");
}

Permutation fz_inverse(const Path& path, const std::vector<int>& labels, LabelVariant v) {
    check_almost_dyck(path);
    const int N = path.length();
    if (static_cast<int>(labels.size()) != N) throw std::invalid_argument("label count differs from path length");
    for (int i = 1; i <= N; ++i) {
        int b = fz_label_bound(path, i);
        if (labels[i - 1] < 0 || labels[i - 1] > b) throw bad_label(i, labels[i - 1], b);
    }
    std::vector<int> rises, falls;
    for (int i = 1; i <= N; ++i) (path.steps[i - 1] == Step::Rise ? rises : falls).push_back(i);
    const int n = N / 2;
    if (static_cast<int>(rises.size()) != n) throw std::invalid_argument("path must have n rises");

    std::vector<int> even_word, odd_word;
    if (v == LabelVariant::Xi) {
        std::vector<int> rem = rises;
        for (int a = 1; a <= n; ++a) {
            int x = labels[2 * a - 1];
            if (x >= static_cast<int>(rem.size())) throw bad_label(2 * a, x, static_cast<int>(rem.size()) - 1);
            even_word.push_back(rem[x]);
            rem.erase(rem.begin() + x);
        }
        rem = falls;
        odd_word.assign(n, 0);
        for (int a = n; a >= 1; --a) {
            int x = labels[2 * a - 2];
            int k = static_cast<int>(rem.size()) - 1 - x;
            if (k < 0) throw bad_label(2 * a - 1, x, static_cast<int>(rem.size()) - 1);
            odd_word[a - 1] = rem[k];
            rem.erase(rem.begin() + k);
        }
    } else {
        for (int val : rises) {
            int x = labels[val - 1];
            int pos = static_cast<int>(even_word.size()) - x;
            if (pos < 0) throw bad_label(val, x, static_cast<int>(even_word.size()));
            even_word.insert(even_word.begin() + pos, val);
        }
        for (auto it = falls.rbegin(); it != falls.rend(); ++it) {
            int x = labels[*it - 1];
            if (x > static_cast<int>(odd_word.size())) throw bad_label(*it, x, static_cast<int>(odd_word.size()));
            odd_word.insert(odd_word.begin() + x, *it);
        }
    }
    std::vector<int> w(N);
    for (int a = 1; a <= n; ++a) {
        w[2 * a - 1] = even_word[a - 1];
        w[2 * a - 2] = odd_word[a - 1];
    }
    Permutation p(w);
    if (!is_d_permutation(p)) throw std::invalid_argument("labels do not describe a D-permutation");
    return p;
}

std::vector<PairLabel> biane_labels(const Permutation& p) {
    const int N = p.size();
    std::vector<PairLabel> out(N, {0, 0});
    for (int i = 1; i <= N; ++i) {
        const int m = p.inv(i);
        if (m % 2) {
            int c = 0;
            for (int j = i + 1; j <= N; ++j)
                if (p.inv(j) < m) ++c;
            out[i - 1].first = c;
        }
        if (i % 2 == 0) {
            int c = 0;
            for (int j = i + 1; j <= N; ++j)
                if (p(j) < p(i)) ++c;
            out[i - 1].second = c;
        }
    }
    return out;
}

PairLabel biane_label_bound(const Path& path, int i) {
    auto h = path.heights();
    int prev = h.at(i - 1);
    if (path.steps.at(i - 1) == Step::Rise) return {0, prev % 2 ? ceil_half(prev) : 0};
    int b = ceil_half(prev - 1);
    return {b, prev % 2 ? b : 0};
}

namespace {

struct Chains {
    std::vector<int> parent;
    explicit Chains(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // arrow a -> b'; true when it closes a cycle
    bool link(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return true;
        parent[ra] = rb;
        return false;
    }
};

}  // namespace

BianeHistory biane_inverse(const Path& path, const std::vector<PairLabel>& labels) {
    check_almost_dyck(path);
    const int N = path.length();
    if (static_cast<int>(labels.size()) != N) throw std::invalid_argument("label count differs from path length");
    auto h = path.heights();
    std::vector<int> sigma(N + 1, 0);
    std::vector<int> top, bottom;  // free vertices of the current digraph, ascending
    Chains ch(N);
    BianeHistory hist;
    hist.free_counts.push_back(0);

    auto take = [](std::vector<int>& v, int idx) {
        int x = v[idx];
        v.erase(v.begin() + idx);
        return x;
    };
    auto insert_sorted = [](std::vector<int>& v, int x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); };

    for (int i = 1; i <= N; ++i) {
        auto [l, m] = labels[i - 1];
        auto [bl, bm] = biane_label_bound(path, i);
        if (l < 0 || m < 0 || l > bl || m > bm)
            throw std::invalid_argument("invalid label at step " + std::to_string(i) + ": (" + std::to_string(l) +
                                        "," + std::to_string(m) + ") outside [0," + std::to_string(bl) + "]x[0," +
                                        std::to_string(bm) + "]");
        const int prev = h[i - 1];
        const bool rise = path.steps[i - 1] == Step::Rise;
        const int k = rise ? ceil_half(prev) : ceil_half(prev - 1);
        if (static_cast<int>(top.size()) != ceil_half(prev) || top.size() != bottom.size())
            throw std::logic_error("free-vertex count disagrees with height");
        if (rise && prev % 2 == 0) {
            insert_sorted(top, i);
            insert_sorted(bottom, i);
        } else if (rise) {
            if (m == k) {
                sigma[i] = i;
                ch.link(i, i);
                ++hist.cycles;
            } else {
                int j = take(bottom, m);
                sigma[i] = j;
                ch.link(i, j);
                insert_sorted(bottom, i);
            }
        } else if (prev % 2 == 0) {
            if (l == k) {
                sigma[i] = i;
                ch.link(i, i);
                ++hist.cycles;
            } else {
                int r = take(top, l);
                sigma[r] = i;
                ch.link(r, i);
                insert_sorted(top, i);
            }
        } else {
            int r = top[l];
            // each free top closes with exactly one free bottom, and conversely
            for (int a : top) {
                int closing = 0;
                for (int b : bottom)
                    if (ch.find(b) == ch.find(a)) ++closing;
                if (closing != 1) throw std::logic_error("cycle-closer choice is not unique");
            }
            for (int b : bottom) {
                int closing = 0;
                for (int a : top)
                    if (ch.find(b) == ch.find(a)) ++closing;
                if (closing != 1) throw std::logic_error("cycle-closer choice is not unique");
            }
            take(top, l);
            int j = take(bottom, m);
            sigma[i] = j;
            sigma[r] = i;
            ch.link(i, j);
            if (ch.link(r, i)) {
                ++hist.cycles;
                hist.closers.push_back(i);
            }
        }
        hist.free_counts.push_back(static_cast<int>(top.size()));
    }
    if (!top.empty() || !bottom.empty()) throw std::logic_error("unmatched vertices at the end");
    hist.perm = Permutation(std::vector<int>(sigma.begin() + 1, sigma.end()));
    return hist;
}

static std::vector<PairLabel> range_labels(int a_max, int b_max) {
    std::vector<PairLabel> v;
    for (int a = 0; a <= a_max; ++a)
        for (int b = 0; b <= b_max; ++b) v.emplace_back(a, b);
    return v;
}

LabelSystem first_label_system() {
    LabelSystem s;
    s.rise = [](int h) { return range_labels(ceil_half(h), 0); };
    s.fall = [](int h) { return h >= 1 ? range_labels(ceil_half(h - 1), 0) : std::vector<PairLabel>{}; };
    s.level = [](int h) { return h == 0 ? range_labels(0, 0) : std::vector<PairLabel>{}; };
    return s;
}

LabelSystem second_label_system() {
    LabelSystem s;
    s.rise = [](int h) { return h % 2 == 0 ? range_labels(0, 0) : range_labels(0, ceil_half(h)); };
    s.fall = [](int h) {
        if (h < 1) return std::vector<PairLabel>{};
        int k = ceil_half(h - 1);
        return h % 2 == 0 ? range_labels(k, 0) : range_labels(k, k);
    };
    s.level = [](int h) { return h == 0 ? range_labels(0, 0) : std::vector<PairLabel>{}; };
    return s;
}

LabelSystem unlabeled_zero_schroeder() {
    LabelSystem s;
    s.rise = [](int) { return range_labels(0, 0); };
    s.fall = [](int h) { return h >= 1 ? range_labels(0, 0) : std::vector<PairLabel>{}; };
    s.level = [](int h) { return h == 0 ? range_labels(0, 0) : std::vector<PairLabel>{}; };
    return s;
}

namespace {

struct Walker {
    const LabelSystem& sys;
    const StepWeight& w;
    int total;
    Poly sum;

    void go(int pos, int h, const Poly& acc) {
        if (h > total - pos) return;
        if (pos == total) {
            if (h == 0) sum += acc;
            return;
        }
        for (auto lab : sys.rise(h)) go(pos + 1, h + 1, acc * w(Step::Rise, h, lab));
        if (h >= 1)
            for (auto lab : sys.fall(h)) go(pos + 1, h - 1, acc * w(Step::Fall, h, lab));
        if (pos + 2 <= total)
            for (auto lab : sys.level(h)) go(pos + 2, h, acc * w(Step::LongLevel, h, lab));
    }
};

}  // namespace

Poly flajolet_weight_sum(const LabelSystem& sys, const StepWeight& w, int two_n, int cap) {
    if (two_n < 0 || two_n % 2) throw std::invalid_argument("path length must be even and nonnegative");
    if (two_n > cap) throw std::invalid_argument("path length " + std::to_string(two_n) + " exceeds cap " + std::to_string(cap));
    Walker walker{sys, w, two_n, Poly()};
    walker.go(0, 0, Poly(1));
    return walker.sum;
}

CFSpec flajolet_tfraction(const LabelSystem& sys, const StepWeight& w, int depth) {
    auto total = [&](Step s, int h, const std::vector<PairLabel>& labs) {
        Poly acc;
        for (auto lab : labs) acc += w(s, h, lab);
        return acc;
    };
    return CFSpec::T(
        [&](int k) { return total(Step::Rise, k - 1, sys.rise(k - 1)) * total(Step::Fall, k, sys.fall(k)); },
        [&](int k) { return total(Step::LongLevel, k - 1, sys.level(k - 1)); }, depth);
}

}  // namespace dperm
