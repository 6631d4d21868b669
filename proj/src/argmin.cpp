#include "spex/argmin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "spex/charpoly.hpp"
#include "spex/enumerate.hpp"

namespace spex {

namespace {

struct Survivor {
    std::uint64_t idx = 0;
    std::vector<int> parent;
    Poly poly;
    RootEnclosure encl;
};

}  // namespace

std::vector<FamilySpec> match_families(const CanonicalForm& form, int n, int beta) {
    std::vector<FamilySpec> out;
    for (Family f : families_with_beta(beta))
        for (const auto& spec : enumerate_family_specs(f, n))
            if (canonical_form(build_family(spec)) == form) out.push_back(spec);
    return out;
}

ExtremalResult argmin_spectral(int n, int beta, int workers, double tol) {
    if (n < 1) throw std::invalid_argument("argmin_spectral: n must be positive");
    if (workers < 1) workers = 1;
    int bits = tol_to_bits(tol);

    std::vector<std::vector<int>> candidates;
    {
        TreeEnumerator en(n, beta);
        std::vector<int> parent;
        while (en.next(parent)) candidates.push_back(parent);
    }
    if (candidates.empty())
        throw std::invalid_argument("argmin_spectral: no tree with matching number " +
                                    std::to_string(beta) + " on " + std::to_string(n) +
                                    " vertices");

    workers = std::min<int>(workers, static_cast<int>(candidates.size()));
    std::vector<std::vector<Survivor>> per_worker(workers);
    auto work = [&](int w) {
        bool have_champion = false;
        Dyadic champion_hi;
        for (std::uint64_t i = w; i < candidates.size(); i += workers) {
            Poly p = char_poly_tree(candidates[i]);
            if (have_champion && sign_at(p, champion_hi) < 0) continue;  // provably worse
            FourierSeq fs(p);
            RootEnclosure e = isolate_largest_root(fs, bits, true);
            if (!have_champion || e.hi < champion_hi) {
                champion_hi = e.hi;
                have_champion = true;
            }
            per_worker[w].push_back(Survivor{i, candidates[i], std::move(p), std::move(e)});
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    std::vector<Survivor> survivors;
    for (auto& v : per_worker)
        for (auto& s : v) survivors.push_back(std::move(s));
    std::sort(survivors.begin(), survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.idx < b.idx; });

    // exact reduce
    Survivor* champ = &survivors[0];
    FourierSeq champ_fs(champ->poly);
    std::vector<Survivor*> ties{champ};
    for (size_t i = 1; i < survivors.size(); ++i) {
        Survivor& s = survivors[i];
        if (sign_at(s.poly, champ->encl.hi) < 0) continue;  // rho(s) > champ hi
        FourierSeq fs(s.poly);
        int cmp = compare_largest_roots(fs, s.encl, champ_fs, champ->encl);
        if (cmp < 0) {
            // ties always bind to the current champion, and the champion only
            // ever changes to something strictly smaller, so reset the set
            champ = &s;
            champ_fs = FourierSeq(champ->poly);
            ties.assign(1, champ);
        } else if (cmp == 0) {
            ties.push_back(&s);
        }
    }

    ExtremalResult out;
    out.n = n;
    out.beta = beta;
    out.tree_count = candidates.size();
    for (Survivor* s : final_ties) {
        Graph t = graph_from_parents(s->parent);
        ExtremalResult::Member m;
        m.form = canonical_form(t);
        m.family_matches = match_families(m.form, n, beta);
        out.argmin.push_back(std::move(m));
    }
    std::sort(out.argmin.begin(), out.argmin.end(),
              [](const auto& a, const auto& b) { return a.form < b.form; });
    out.ties_certified = out.argmin.size() > 1;

    // re-isolate the champion enclosure so the reported value does not depend
    // on the comparison history
    FourierSeq fs(champ->poly);
    RootEnclosure fresh = isolate_largest_root(fs, bits, true);
    out.min_rho.lo = fresh.lo;
    out.min_rho.hi = fresh.hi;
    out.min_rho.rho = fresh.mid();
    out.min_rho.tol = 0.5 * fresh.width();
    return out;
}

}  // namespace spex
