#pragma once

#include <string>
#include <vector>

#include "dperm/perm.hpp"

namespace dperm {

enum class CycleType { CPeak, CVal, CDRise, CDFall, Fix };
enum class RecordType { Erec, Earec, Rar, Nrar };

struct IndexClass {
    CycleType cycle;
    RecordType record;
    bool even;
};

std::string cycle_type_name(CycleType t);
std::string record_type_name(RecordType t);

IndexClass classify_index(const Permutation& p, int i);

// Per-index data. Index-refined counts follow the excedance status of the index;
// the primed counts follow the excedance status of its preimage.
struct IndexStats {
    IndexClass cls;
    bool rec = false, arec = false;
    int ucross = 0, unest = 0, lcross = 0, lnest = 0, psnest = 0;
    int ucross_p = 0, unest_p = 0, lcross_p = 0, lnest_p = 0;
    bool preimage_rec = false, preimage_arec = false;
};

struct StatProfile {
    int n = 0;
    // twelve-type classification
    int eareccpeak = 0, eareccdfall = 0, ereccval = 0, ereccdrise = 0;
    int nrcpeak = 0, nrcdfall = 0, nrcval = 0, nrcdrise = 0;
    int evennrfix = 0, oddnrfix = 0, evenrar = 0, oddrar = 0;
    // refined crossings and nestings
    int ucrosscval = 0, ucrosscdrise = 0, lcrosscpeak = 0, lcrosscdfall = 0;
    int unestcval = 0, unestcdrise = 0, lnestcpeak = 0, lnestcdfall = 0;
    int ujoin = 0, ljoin = 0;
    int psnest_e = 0, psnest_o = 0;
    int cyc = 0;
    int minval = 0, nminval = 0, maxpeak = 0, nmaxpeak = 0;
    // record status of the preimage
    int ereccdrise_p = 0, nrcdrise_p = 0, ereccpeak_p = 0, nrcpeak_p = 0;
    int eareccval_p = 0, nrcval_p = 0, eareccdfall_p = 0, nrcdfall_p = 0;
    // primed crossings and nestings summed over the cycle type
    int ucrosscdrise_p = 0, unestcdrise_p = 0, ucrosscpeak_p = 0, unestcpeak_p = 0;
    int lcrosscval_p = 0, lnestcval_p = 0, lcrosscdfall_p = 0, lnestcdfall_p = 0;
    int inv = 0;

    int cpeak() const { return eareccpeak + nrcpeak; }
    int cval() const { return ereccval + nrcval; }
    int cdrise() const { return ereccdrise + nrcdrise; }
    int cdfall() const { return eareccdfall + nrcdfall; }
    int evenfix() const { return evennrfix + evenrar; }
    int oddfix() const { return oddnrfix + oddrar; }
    int ucross() const { return ucrosscval + ucrosscdrise; }
    int unest() const { return unestcval + unestcdrise; }
    int lcross() const { return lcrosscpeak + lcrosscdfall; }
    int lnest() const { return lnestcpeak + lnestcdfall; }
    int psnest() const { return psnest_e + psnest_o; }
    int earec() const { return eareccpeak + eareccdfall; }
    int erec() const { return ereccval + ereccdrise; }
    int arec() const;  // includes rar
    int rec() const;
};

// O(N^2) scans.
std::vector<IndexStats> index_stats(const Permutation& p);
StatProfile stat_profile(const Permutation& p);
StatProfile stat_profile(const Permutation& p, const std::vector<IndexStats>& idx);

std::pair<int, int> index_refined(const Permutation& p, int j);
std::pair<int, int> variant_index_refined(const Permutation& p, int k);

// Whole-permutation pattern counts (upsnest and lpsnest are the two pseudo-nesting totals).
struct PatternTotals {
    int ucross = 0, unest = 0, lcross = 0, lnest = 0, ujoin = 0, ljoin = 0;
    int upsnest = 0, lpsnest = 0;
};
PatternTotals pattern_totals_fast(const Permutation& p);

// Largest element of each non-singleton cycle.
std::vector<int> cycle_closers(const Permutation& p);

}  // namespace dperm
