#include "fringestat/params.hpp"

#include <algorithm>

#include "json.hpp"

namespace fringestat {

IndependenceResult independence(const RootedTree& tree) {
    const std::uint32_t n = tree.n();
    IndependenceResult res;
    res.in_set.assign(n, 0);
    // has_flagged_child[v] is complete once every index > v has been seen,
    // which reverse index order guarantees.
    std::vector<std::uint8_t> has_flagged_child(n, 0);
    std::uint64_t count = 0;
    for (NodeId v = n; v-- > 0;) {
        const std::uint8_t flag = !has_flagged_child[v];
        res.in_set[v] = flag;
        count += flag;
        if (flag && v != 0) has_flagged_child[tree.parent(v)] = 1;
    }
    res.value = count;
    return res;
}

IndependenceResult layered_stripping(const RootedTree& tree) {
    const std::uint32_t n = tree.n();
    IndependenceResult res;
    res.in_set.assign(n, 0);
    std::vector<std::uint8_t> alive(n, 1);
    std::vector<std::uint32_t> alive_children(n);
    for (NodeId v = 0; v < n; ++v) alive_children[v] = tree.child_count(v);

    std::uint32_t remaining = n;
    std::vector<NodeId> removed;
    while (remaining > 0) {
        removed.clear();
        // Leaves of the current forest: isolated survivors count, their
        // parent link having been severed by an earlier round's removal.
        for (NodeId v = 0; v < n; ++v) {
            if (alive[v] && alive_children[v] == 0) {
                res.in_set[v] = 1;
                removed.push_back(v);
            }
        }
        for (std::size_t i = 0, leaves = removed.size(); i < leaves; ++i) {
            NodeId p = tree.parent(removed[i]);
            if (p != kNoNode && alive[p]) {
                alive[p] = 0;  // cleared now so a shared parent enters once
                removed.push_back(p);
            }
        }
        for (NodeId v : removed) alive[v] = 0;
        for (NodeId v : removed) {
            NodeId p = tree.parent(v);
            if (p != kNoNode && alive[p]) --alive_children[p];
        }
        remaining -= static_cast<std::uint32_t>(removed.size());
    }
    for (std::uint8_t f : res.in_set) res.value += f;
    return res;
}

DominationResult domination(const RootedTree& tree) {
    const std::uint32_t n = tree.n();
    const std::uint32_t sentinel = n + 1;
    DominationResult res;
    res.d0.assign(n, 0);
    res.d1.assign(n, 0);
    res.d2.assign(n, 0);
    res.rd.assign(n, 0);
    res.ri.assign(n, 0);

    // Children accumulators, filled by the time the reverse scan reaches v.
    std::vector<std::uint32_t> sum_min012(n, 0);
    std::vector<std::uint32_t> sum_min01(n, 0);
    std::vector<std::uint32_t> best_delta(n, sentinel);  // sentinel: no children

    for (NodeId v = n; v-- > 0;) {
        std::uint32_t d0, d1, d2;
        if (best_delta[v] == sentinel) {
            d0 = 1;
            d1 = sentinel;
            d2 = 0;
        } else {
            d0 = 1 + sum_min012[v];
            d2 = sum_min01[v];
            d1 = d2 + best_delta[v];
        }
        res.d0[v] = d0;
        res.d1[v] = d1;
        res.d2[v] = d2;
        const std::uint32_t value = std::min(d0, d1);
        res.rd[v] = (d2 == value - 1);
        res.ri[v] = !res.rd[v] && d0 == value;
        if (v == 0) {
            res.value = value;
        } else {
            const NodeId p = tree.parent(v);
            const std::uint32_t min01 = std::min(d0, d1);
            sum_min012[p] += std::min(min01, d2);
            sum_min01[p] += min01;
            // d0 - min01 <= n < sentinel, so one min also clears the
            // no-children marker.
            best_delta[p] = std::min(best_delta[p], d0 - min01);
        }
    }
    return res;
}

std::uint64_t k_domination(const RootedTree& tree, std::uint32_t k) {
    if (k == 0) throw TreeError{"k must be >= 1"};
    if (tree.model() == Model::bst && k > 3)
        throw TreeError{"k-domination on bst trees supports k <= 3 (max degree 3)"};
    const std::uint32_t n = tree.n();
    static constexpr std::uint64_t INF = std::uint64_t(1) << 61;
    auto addc = [](std::uint64_t a, std::uint64_t b) { return std::min(a + b, INF); };

    // table[v*(k+1) + j]: cheapest assignment of v's children with j of them
    // in the set (j saturating at k) while every descendant constraint holds
    // as if v were out of the set; sum_in_g accumulates the children costs
    // for the case v is in the set.
    std::vector<std::uint64_t> table(static_cast<std::size_t>(n) * (k + 1), INF);
    for (NodeId v = 0; v < n; ++v) table[static_cast<std::size_t>(v) * (k + 1)] = 0;
    std::vector<std::uint64_t> sum_in_g(n, 0);

    std::uint64_t answer = 0;
    for (NodeId v = n; v-- > 0;) {
        std::uint64_t* t = table.data() + static_cast<std::size_t>(v) * (k + 1);
        const std::uint64_t g_full = t[k];                      // v out, parent out
        const std::uint64_t g_less = std::min(t[k - 1], t[k]);  // v out, parent in
        const std::uint64_t in_v = addc(1, sum_in_g[v]);
        if (v == 0) {
            answer = std::min(in_v, g_full);
            break;
        }
        const NodeId p = tree.parent(v);
        sum_in_g[p] = addc(sum_in_g[p], std::min(in_v, g_less));
        std::uint64_t* tp = table.data() + static_cast<std::size_t>(p) * (k + 1);
        // Right-to-left keeps tp[j-1] at its pre-child value.
        for (std::uint32_t j = k; j >= 1; --j) {
            std::uint64_t best = addc(tp[j], g_full);
            best = std::min(best, addc(tp[j - 1], in_v));
            if (j == k) best = std::min(best, addc(tp[j], in_v));
            tp[j] = best;
        }
        tp[0] = addc(tp[0], g_full);
    }
    return answer;
}

ParameterReport full_report(const RootedTree& tree, const std::vector<std::uint32_t>& k_list) {
    ParameterReport r;
    r.n = tree.n();
    r.I = independence(tree).value;
    r.D = domination(tree).value;
    for (std::uint32_t k : k_list) r.Dk[k] = k_domination(tree, k);
    r.M = r.n - r.I;
    r.VC = r.M;
    if (r.n >= 2) r.EC = r.I;
    r.CC = r.I;
    r.lap1_mult = 2 * static_cast<std::int64_t>(r.I) - static_cast<std::int64_t>(r.n);
    return r;
}

namespace {

nlohmann::json report_json(const ParameterReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["I"] = r.I;
    j["D"] = r.D;
    j["Dk"] = nlohmann::json::object();
    for (const auto& [k, v] : r.Dk) j["Dk"][std::to_string(k)] = v;
    j["M"] = r.M;
    j["VC"] = r.VC;
    if (r.EC)
        j["EC"] = *r.EC;
    else
        j["EC"] = nullptr;
    j["CC"] = r.CC;
    j["lap1_mult"] = r.lap1_mult;
    return j;
}

}  // namespace

std::string report_to_json(const ParameterReport& report) {
    return report_json(report).dump();
}

std::string report_to_json(const ParameterReport& report, const RootedTree& tree, bool with_flags) {
    nlohmann::json j = report_json(report);
    if (with_flags) {
        IndependenceResult ind = independence(tree);
        DominationResult dom = domination(tree);
        j["flags"]["in_set"] = ind.in_set;
        j["flags"]["rd"] = dom.rd;
        j["flags"]["ri"] = dom.ri;
    }
    return j.dump();
}

}  // namespace fringestat
