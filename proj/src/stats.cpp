#include "dperm/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace dperm {

std::string cycle_type_name(CycleType t) {
    switch (t) {
        case CycleType::CPeak: return "cpeak";
        case CycleType::CVal: return "cval";
        case CycleType::CDRise: return "cdrise";
        case CycleType::CDFall: return "cdfall";
        case CycleType::Fix: return "fix";
    }
    return "?";
}

std::string record_type_name(RecordType t) {
    switch (t) {
        case RecordType::Erec: return "erec";
        case RecordType::Earec: return "earec";
        case RecordType::Rar: return "rar";
        case RecordType::Nrar: return "nrar";
    }
    return "?";
}

static CycleType cycle_type(const Permutation& p, int i) {
    int a = p.inv(i), b = p(i);
    if (b == i) return CycleType::Fix;
    if (a < i && i > b) return CycleType::CPeak;
    if (a > i && i < b) return CycleType::CVal;
    if (a < i && i < b) return CycleType::CDRise;
    return CycleType::CDFall;
}

static RecordType record_type(bool rec, bool arec) {
    if (rec && arec) return RecordType::Rar;
    if (rec) return RecordType::Erec;
    if (arec) return RecordType::Earec;
    return RecordType::Nrar;
}

IndexClass classify_index(const Permutation& p, int i) {
    if (i < 1 || i > p.size()) throw std::out_of_range("index " + std::to_string(i) + " out of range");
    return {cycle_type(p, i), record_type(is_record(p, i), is_antirecord(p, i)), i % 2 == 0};
}

std::vector<IndexStats> index_stats(const Permutation& p) {
    const int N = p.size();
    std::vector<IndexStats> out(N + 1);
    std::vector<char> rec(N + 2, 0), arec(N + 2, 0);
    int pmax = 0;
    for (int i = 1; i <= N; ++i) {
        rec[i] = p(i) > pmax;
        pmax = std::max(pmax, p(i));
    }
    int smin = N + 1;
    for (int i = N; i >= 1; --i) {
        arec[i] = p(i) < smin;
        smin = std::min(smin, p(i));
    }
    for (int i = 1; i <= N; ++i) {
        IndexStats& s = out[i];
        s.cls = {cycle_type(p, i), record_type(rec[i], arec[i]), i % 2 == 0};
        s.rec = rec[i];
        s.arec = arec[i];
        const int v = p(i);
        if (v > i) {
            for (int a = 1; a < i; ++a) {
                int w = p(a);
                if (w > v)
                    ++s.unest;
                else if (w > i)
                    ++s.ucross;
            }
        } else if (v < i) {
            for (int l = i + 1; l <= N; ++l) {
                int w = p(l);
                if (w < v)
                    ++s.lnest;
                else if (w < i)
                    ++s.lcross;
            }
        } else {
            for (int a = 1; a < i; ++a)
                if (p(a) > i) ++s.psnest;
        }
        const int m = p.inv(i);
        s.preimage_rec = rec[m];
        s.preimage_arec = arec[m];
        if (m < i) {
            for (int j = m + 1; j < i; ++j)
                if (p(j) > i) ++s.ucross_p;
            for (int a = 1; a < m; ++a)
                if (p(a) > i) ++s.unest_p;
        } else if (m > i) {
            for (int l = i + 1; l < m; ++l)
                if (p(l) < i) ++s.lcross_p;
            for (int l = m + 1; l <= N; ++l)
                if (p(l) < i) ++s.lnest_p;
        }
    }
    return out;
}

std::vector<int> cycle_closers(const Permutation& p) {
    std::vector<char> seen(p.size() + 1, 0);
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i) {
        if (seen[i] || p(i) == i) continue;
        int mx = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            mx = std::max(mx, j);
        }
        out.push_back(mx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

StatProfile stat_profile(const Permutation& p) { return stat_profile(p, index_stats(p)); }

StatProfile stat_profile(const Permutation& p, const std::vector<IndexStats>& idx) {
    const int N = p.size();
    StatProfile s;
    s.n = N / 2;
    for (int i = 1; i <= N; ++i) {
        const IndexStats& x = idx[i];
        bool ex_arec = x.arec && !x.rec, ex_rec = x.rec && !x.arec;
        bool pre_rec = x.preimage_rec && !x.preimage_arec;
        bool pre_arec = x.preimage_arec && !x.preimage_rec;
        switch (x.cls.cycle) {
            case CycleType::CPeak:
                (ex_arec ? s.eareccpeak : s.nrcpeak)++;
                (pre_rec ? s.ereccpeak_p : s.nrcpeak_p)++;
                s.lcrosscpeak += x.lcross;
                s.lnestcpeak += x.lnest;
                s.ucrosscpeak_p += x.ucross_p;
                s.unestcpeak_p += x.unest_p;
                break;
            case CycleType::CDFall:
                (ex_arec ? s.eareccdfall : s.nrcdfall)++;
                (pre_arec ? s.eareccdfall_p : s.nrcdfall_p)++;
                s.lcrosscdfall += x.lcross;
                s.lnestcdfall += x.lnest;
                s.lcrosscdfall_p += x.lcross_p;
                s.lnestcdfall_p += x.lnest_p;
                break;
            case CycleType::CVal:
                (ex_rec ? s.ereccval : s.nrcval)++;
                (pre_arec ? s.eareccval_p : s.nrcval_p)++;
                s.ucrosscval += x.ucross;
                s.unestcval += x.unest;
                s.lcrosscval_p += x.lcross_p;
                s.lnestcval_p += x.lnest_p;
                break;
            case CycleType::CDRise:
                (ex_rec ? s.ereccdrise : s.nrcdrise)++;
                (pre_rec ? s.ereccdrise_p : s.nrcdrise_p)++;
                s.ucrosscdrise += x.ucross;
                s.unestcdrise += x.unest;
                s.ucrosscdrise_p += x.ucross_p;
                s.unestcdrise_p += x.unest_p;
                break;
            case CycleType::Fix: {
                bool rar = x.rec && x.arec;
                if (x.cls.even) {
                    (rar ? s.evenrar : s.evennrfix)++;
                    s.psnest_e += x.psnest;
                } else {
                    (rar ? s.oddrar : s.oddnrfix)++;
                    s.psnest_o += x.psnest;
                }
                break;
            }
        }
        if (p.inv(i) < i && i < p(i)) s.ujoin++;
        if (p.inv(i) > i && i > p(i)) s.ljoin++;
    }

    std::vector<int> cyc_id(N + 1, -1), cmin, cmax;
    for (int i = 1; i <= N; ++i) {
        if (cyc_id[i] >= 0) continue;
        int id = s.cyc++;
        int lo = i, hi = i;
        for (int j = i; cyc_id[j] < 0; j = p(j)) {
            cyc_id[j] = id;
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
        cmin.push_back(lo);
        cmax.push_back(hi);
    }
    for (int i = 1; i <= N; ++i) {
        CycleType t = idx[i].cls.cycle;
        if (t == CycleType::CVal) (cmin[cyc_id[i]] == i ? s.minval : s.nminval)++;
        if (t == CycleType::CPeak) (cmax[cyc_id[i]] == i ? s.maxpeak : s.nmaxpeak)++;
    }

    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (p(i) > p(j)) s.inv++;
    return s;
}

int StatProfile::arec() const { return earec() + evenrar + oddrar; }
int StatProfile::rec() const { return erec() + evenrar + oddrar; }

std::pair<int, int> index_refined(const Permutation& p, int j) {
    if (j < 1 || j > p.size()) throw std::out_of_range("index out of range");
    auto v = index_stats(p);
    const IndexStats& s = v[j];
    if (p(j) > j) return {s.ucross, s.unest};
    if (p(j) < j) return {s.lcross, s.lnest};
    return {s.psnest, s.psnest};
}

std::pair<int, int> variant_index_refined(const Permutation& p, int k) {
    if (k < 1 || k > p.size()) throw std::out_of_range("index out of range");
    auto v = index_stats(p);
    const IndexStats& s = v[k];
    int m = p.inv(k);
    if (m < k) return {s.ucross_p, s.unest_p};
    if (m > k) return {s.lcross_p, s.lnest_p};
    return {s.psnest, s.psnest};
}

PatternTotals pattern_totals_fast(const Permutation& p) {
    PatternTotals t;
    auto v = index_stats(p);
    const int N = p.size();
    for (int i = 1; i <= N; ++i) {
        t.ucross += v[i].ucross;
        t.unest += v[i].unest;
        t.lcross += v[i].lcross;
        t.lnest += v[i].lnest;
        if (p.inv(i) < i && i < p(i)) t.ujoin++;
        if (p.inv(i) > i && i > p(i)) t.ljoin++;
        if (p(i) == i) {
            t.upsnest += v[i].psnest;
            for (int l = i + 1; l <= N; ++l)
                if (p(l) < i) t.lpsnest++;
        }
    }
    return t;
}

}  // namespace dperm
