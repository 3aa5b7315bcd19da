#include "vknot/moves.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "vknot/invariants.hpp"
#include "vknot/surface.hpp"

namespace vknot {

namespace {

std::vector<Endpoint> endpoints_copy(const LongDiagram& d) { return d.endpoints(); }

void check_slot(const LongDiagram& d, int position) {
    if (position < 0 || position > static_cast<int>(d.endpoints().size()))
        throw std::out_of_range("insertion slot out of range");
}

}  // namespace

LongDiagram r1_insert(const LongDiagram& d, int position, int sign, KinkOrder order) {
    check_slot(d, position);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const int label = d.chord_count() == 0 ? 1 : d.max_label() + 1;
    auto eps = endpoints_copy(d);
    const Passage first = order == KinkOrder::OverFirst ? Passage::Over : Passage::Under;
    const Passage second = order == KinkOrder::OverFirst ? Passage::Under : Passage::Over;
    eps.insert(eps.begin() + position, {Endpoint{label, first, sign}, Endpoint{label, second, sign}});
    return LongDiagram::from_endpoints(std::move(eps));
}

std::vector<int> r1_kinks(const LongDiagram& d) {
    std::vector<int> out;
    for (int label : d.labels()) {
        const Chord& c = d.chord(label);
        if (std::abs(c.over_pos - c.under_pos) == 1) out.push_back(label);
    }
    return out;
}

LongDiagram r1_delete(const LongDiagram& d, int label) {
    const Chord& c = d.chord(label);
    if (std::abs(c.over_pos - c.under_pos) != 1)
        throw std::invalid_argument("chord is not a kink");
    auto eps = endpoints_copy(d);
    const int lo = std::min(c.over_pos, c.under_pos);
    eps.erase(eps.begin() + lo, eps.begin() + lo + 2);
    return LongDiagram::from_endpoints(std::move(eps));
}

LongDiagram r2_insert(const LongDiagram& d, int pos1, int pos2, R2Variant variant,
                      bool over_first, int sign) {
    check_slot(d, pos1);
    check_slot(d, pos2);
    if (pos1 > pos2) throw std::invalid_argument("insertion slots must be ordered");
    // Both feet on one arc fold the strand over itself; only the nested
    // (antiparallel) pattern is a canceling pair there.
    if (pos1 == pos2 && variant == R2Variant::Parallel)
        throw std::invalid_argument("parallel insertion needs distinct slots");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const int l1 = d.chord_count() == 0 ? 1 : d.max_label() + 1;
    const int l2 = l1 + 1;
    const Passage p1 = over_first ? Passage::Over : Passage::Under;
    const Passage p2 = over_first ? Passage::Under : Passage::Over;
    auto eps = endpoints_copy(d);
    // Insert the later slot first so pos1 stays valid.
    if (variant == R2Variant::Parallel)
        eps.insert(eps.begin() + pos2, {Endpoint{l1, p2, sign}, Endpoint{l2, p2, -sign}});
    else
        eps.insert(eps.begin() + pos2, {Endpoint{l2, p2, -sign}, Endpoint{l1, p2, sign}});
    eps.insert(eps.begin() + pos1, {Endpoint{l1, p1, sign}, Endpoint{l2, p1, -sign}});
    return LongDiagram::from_endpoints(std::move(eps));
}

namespace {

bool is_r2_pair(const LongDiagram& d, int label1, int label2) {
    if (label1 == label2) return false;
    const Chord& c1 = d.chord(label1);
    const Chord& c2 = d.chord(label2);
    if (c1.sign != -c2.sign) return false;
    const auto adjacent = [](int a, int b) { return std::abs(a - b) == 1; };
    return adjacent(c1.over_pos, c2.over_pos) && adjacent(c1.under_pos, c2.under_pos);
}

}  // namespace

std::vector<std::pair<int, int>> r2_pairs(const LongDiagram& d) {
    std::vector<std::pair<int, int>> out;
    const auto labels = d.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (is_r2_pair(d, labels[i], labels[j])) out.emplace_back(labels[i], labels[j]);
    return out;
}

LongDiagram r2_delete(const LongDiagram& d, int label1, int label2) {
    if (!is_r2_pair(d, label1, label2))
        throw std::invalid_argument("chords do not form a canceling pair");
    const Chord& c1 = d.chord(label1);
    const Chord& c2 = d.chord(label2);
    std::array<int, 4> pos{c1.over_pos, c1.under_pos, c2.over_pos, c2.under_pos};
    std::sort(pos.begin(), pos.end(), std::greater<int>());
    auto eps = endpoints_copy(d);
    for (int p : pos) eps.erase(eps.begin() + p);
    return LongDiagram::from_endpoints(std::move(eps));
}

std::vector<R3Triple> r3_triples(const LongDiagram& d) {
    std::vector<R3Triple> out;
    if (d.chord_count() < 3) return out;
    const CarterSurface surface(d);
    const auto& eps = d.endpoints();
    for (const auto& face : surface.graph().faces()) {
        if (face.size() != 3) continue;
        std::array<int, 3> arcs{};
        bool ok = true;
        for (int k = 0; k < 3; ++k) {
            arcs[k] = face[k] / 2;
            if (arcs[k] == 0) ok = false;  // the basepoint arc cannot move
        }
        if (!ok) continue;
        std::sort(arcs.begin(), arcs.end());
        // Arcs must be distinct and their endpoint pairs disjoint.
        if (arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] + 1 == arcs[1] ||
            arcs[1] + 1 == arcs[2])
            continue;
        // Each triangle edge must join the adjacent endpoints of two
        // distinct chords of the triple.
        std::array<int, 3> pair_pos{};
        std::map<int, int> chord_uses;
        int over_pairs = 0, under_pairs = 0;
        for (int k = 0; k < 3 && ok; ++k) {
            const int p = arcs[k] - 1;
            pair_pos[k] = p;
            const Endpoint& e1 = eps[p];
            const Endpoint& e2 = eps[p + 1];
            if (e1.label == e2.label) ok = false;
            ++chord_uses[e1.label];
            ++chord_uses[e2.label];
            if (e1.passage == Passage::Over && e2.passage == Passage::Over) ++over_pairs;
            if (e1.passage == Passage::Under && e2.passage == Passage::Under) ++under_pairs;
        }
        if (!ok || chord_uses.size() != 3) continue;
        for (const auto& [label, uses] : chord_uses)
            if (uses != 2) ok = false;
        if (!ok || over_pairs != 1 || under_pairs != 1) continue;
        R3Triple t;
        int k = 0;
        for (const auto& [label, uses] : chord_uses) t.labels[k++] = label;
        std::sort(pair_pos.begin(), pair_pos.end());
        t.pair_pos = pair_pos;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const R3Triple& a, const R3Triple& b) {
        return a.pair_pos < b.pair_pos;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LongDiagram r3_apply(const LongDiagram& d, const R3Triple& triple) {
    const auto found = r3_triples(d);
    if (std::find(found.begin(), found.end(), triple) == found.end())
        throw std::invalid_argument("triple is not a sound third-move site");
    auto eps = endpoints_copy(d);
    for (int p : triple.pair_pos) std::swap(eps[p], eps[p + 1]);
    return LongDiagram::from_endpoints(std::move(eps));
}

LongDiagram random_diagram(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("chord count must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(i);
        labels.push_back(i);
    }
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Endpoint> eps;
    std::map<int, std::pair<Passage, int>> first_token;  // first passage + sign
    std::uniform_int_distribution<int> coin(0, 1);
    for (int label : labels) {
        auto it = first_token.find(label);
        if (it == first_token.end()) {
            const Passage p = coin(rng) == 0 ? Passage::Over : Passage::Under;
            const int sign = coin(rng) == 0 ? +1 : -1;
            first_token[label] = {p, sign};
            eps.push_back({label, p, sign});
        } else {
            const Passage p =
                it->second.first == Passage::Over ? Passage::Under : Passage::Over;
            eps.push_back({label, p, it->second.second});
        }
    }
    return LongDiagram::from_endpoints(std::move(eps));
}

std::vector<std::pair<MoveEvent, LongDiagram>> random_walk(const LongDiagram& d, int steps,
                                                           std::uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<MoveEvent, LongDiagram>> out;
    LongDiagram cur = d;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int step = 0; step < steps; ++step) {
        const auto kinks = r1_kinks(cur);
        const auto pairs = r2_pairs(cur);
        const auto triples = r3_triples(cur);
        std::vector<std::string> kinds{"R1_insert", "R2_insert"};
        if (!kinks.empty()) kinds.push_back("R1_delete");
        if (!pairs.empty()) kinds.push_back("R2_delete");
        if (!triples.empty()) kinds.push_back("R3");
        const std::string kind =
            kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];

        MoveEvent ev;
        ev.kind = kind;
        const int two_n = static_cast<int>(cur.endpoints().size());
        if (kind == "R1_insert") {
            const int pos = std::uniform_int_distribution<int>(0, two_n)(rng);
            const int sign = coin(rng) == 0 ? +1 : -1;
            const KinkOrder order = coin(rng) == 0 ? KinkOrder::OverFirst : KinkOrder::UnderFirst;
            ev.params = {{"position", pos},
                         {"sign", sign},
                         {"order", order == KinkOrder::OverFirst ? "O-first" : "U-first"}};
            cur = r1_insert(cur, pos, sign, order);
        } else if (kind == "R1_delete") {
            const int label =
                kinks[std::uniform_int_distribution<std::size_t>(0, kinks.size() - 1)(rng)];
            ev.params = {{"label", label}};
            cur = r1_delete(cur, label);
        } else if (kind == "R2_insert") {
            const int p1 = std::uniform_int_distribution<int>(0, two_n)(rng);
            const int p2 = std::uniform_int_distribution<int>(0, two_n)(rng);
            const int pos1 = std::min(p1, p2);
            const int pos2 = std::max(p1, p2);
            const R2Variant variant = (pos1 != pos2 && coin(rng) == 0)
                                          ? R2Variant::Parallel
                                          : R2Variant::Antiparallel;
            const bool over_first = coin(rng) == 0;
            const int sign = coin(rng) == 0 ? +1 : -1;
            ev.params = {{"pos1", pos1},
                         {"pos2", pos2},
                         {"variant", variant == R2Variant::Parallel ? "parallel" : "antiparallel"},
                         {"over_strand", over_first ? "first" : "second"},
                         {"sign", sign}};
            cur = r2_insert(cur, pos1, pos2, variant, over_first, sign);
        } else if (kind == "R2_delete") {
            const auto [l1, l2] =
                pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
            ev.params = {{"label1", l1}, {"label2", l2}};
            cur = r2_delete(cur, l1, l2);
        } else {
            const R3Triple t =
                triples[std::uniform_int_distribution<std::size_t>(0, triples.size() - 1)(rng)];
            ev.params = {{"labels", t.labels}, {"pair_pos", t.pair_pos}};
            cur = r3_apply(cur, t);
        }
        out.emplace_back(std::move(ev), cur);
    }
    return out;
}

LongDiagram MarkedDiagram::variant(std::uint32_t delta) const {
    if (marks.size() >= 32) throw std::invalid_argument("too many marks");
    LongDiagram out = base;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (!base.has_chord(marks[i])) throw std::invalid_argument("mark is not a chord of base");
        if ((delta >> i) & 1u)
            out = rule == MarkRule::CrossingChange ? out.crossing_change(marks[i])
                                                   : out.virtualized(marks[i]);
    }
    return out;
}

LaurentPoly select_invariant(const LongDiagram& d, const std::string& selector) {
    if (selector == "closedW" || selector == "closedI" || selector == "closedII") {
        const ClosedInvariants c = closed_invariants(closure(d));
        if (selector == "closedW") return c.W;
        if (selector == "closedI") return c.first;
        return c.second;
    }
    const InvariantReport r = invariants(d);
    if (selector == "W0") return r.W[0];
    if (selector == "W1") return r.W[1];
    if (selector == "Wtilde") return r.W_tilde;
    if (selector == "Ftilde") return r.F_tilde;
    if (selector == "Gtilde") return r.G_tilde;
    if (selector == "Htilde") return r.H_tilde;
    if (selector.size() == 3 && (selector[0] == 'F' || selector[0] == 'G' || selector[0] == 'H')) {
        const int a = selector[1] - '0';
        const int b = selector[2] - '0';
        if (a >= 0 && a <= 1 && b >= 0 && b <= 1) {
            if (selector[0] == 'F') return r.F[a][b];
            if (selector[0] == 'G') return r.G[a][b];
            return r.H[a][b];
        }
    }
    throw std::invalid_argument("unknown invariant selector: " + selector);
}

LaurentPoly alternating_sum(const MarkedDiagram& m, const std::string& selector) {
    const std::size_t k = m.marks.size();
    const std::uint32_t count = 1u << k;
    std::vector<LaurentPoly> parts(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (count >= 8)
#endif
    for (std::uint32_t delta = 0; delta < count; ++delta)
        parts[delta] = select_invariant(m.variant(delta), selector);
    LaurentPoly sum;
    for (std::uint32_t delta = 0; delta < count; ++delta) {
        if (__builtin_popcount(delta) % 2 == 0)
            sum += parts[delta];
        else
            sum -= parts[delta];
    }
    return sum;
}

DegreeTwoWitness degree_two_witness(MarkRule rule) {
    if (rule != MarkRule::CrossingChange)
        throw std::invalid_argument("witness search is defined for crossing changes");
    static const std::array<const char*, 3> families{"F", "G", "H"};
    for (int n = 2; n <= 4; ++n) {
        // All interleavings of n chords in lexicographic order, then all
        // over/under and sign assignments, then all mark pairs.
        std::vector<int> pattern;
        for (int i = 1; i <= n; ++i) {
            pattern.push_back(i);
            pattern.push_back(i);
        }
        std::sort(pattern.begin(), pattern.end());
        do {
            // Keep only patterns where each label's first occurrence is in
            // ascending label order (canonical representatives).
            {
                std::vector<int> seen;
                bool canonical_order = true;
                for (int l : pattern) {
                    if (std::find(seen.begin(), seen.end(), l) == seen.end()) {
                        if (!seen.empty() && l < seen.back()) canonical_order = false;
                        seen.push_back(l);
                    }
                }
                if (!canonical_order) continue;
            }
            for (std::uint32_t ou = 0; ou < (1u << n); ++ou) {
                for (std::uint32_t sg = 0; sg < (1u << n); ++sg) {
                    std::vector<Endpoint> eps;
                    std::vector<bool> seen(n + 1, false);
                    for (int l : pattern) {
                        const bool first = !seen[l];
                        seen[l] = true;
                        const bool over_first = ((ou >> (l - 1)) & 1u) == 0;
                        const Passage p = first == over_first ? Passage::Over : Passage::Under;
                        const int sign = ((sg >> (l - 1)) & 1u) == 0 ? +1 : -1;
                        eps.push_back({l, p, sign});
                    }
                    const LongDiagram d = LongDiagram::from_endpoints(std::move(eps));
                    for (int m1 = 1; m1 <= n; ++m1) {
                        for (int m2 = m1 + 1; m2 <= n; ++m2) {
                            MarkedDiagram md{d, {m1, m2}, MarkRule::CrossingChange};
                            for (int a = 0; a < 2; ++a) {
                                for (int b = 0; b < 2; ++b) {
                                    const std::string ab{static_cast<char>('0' + a),
                                                         static_cast<char>('0' + b)};
                                    const LaurentPoly f = alternating_sum(md, "F" + ab);
                                    if (f.is_zero()) continue;
                                    DegreeTwoWitness w;
                                    w.marked = md;
                                    w.a = a;
                                    w.b = b;
                                    w.f_sum = f;
                                    w.g_sum = alternating_sum(md, "G" + ab);
                                    w.h_sum = alternating_sum(md, "H" + ab);
                                    return w;
                                }
                            }
                        }
                    }
                }
            }
        } while (std::next_permutation(pattern.begin(), pattern.end()));
    }
    throw std::runtime_error("no degree-two witness found within the search bound");
}

}  // namespace vknot
