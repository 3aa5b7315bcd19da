#include "vknot/surface.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vknot {

std::vector<std::vector<int>> RibbonGraph::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(2 * n_arcs, false);
    for (int start = 0; start < 2 * n_arcs; ++start) {
        if (seen[start]) continue;
        std::vector<int> walk;
        int h = start;
        do {
            seen[h] = true;
            walk.push_back(h);
            const int o = other_half(h);
            const int v = vertex_of_half[o];
            h = rotation[v][(slot_of_half[o] + 1) % 4];
        } while (h != start);
        out.push_back(std::move(walk));
    }
    return out;
}

int RibbonGraph::genus() const {
    if (n_vertices == 0) return 0;
    const int f = static_cast<int>(faces().size());
    const int chi = n_vertices - n_arcs + f;
    if (chi > 2 || (2 - chi) % 2 != 0)
        throw std::logic_error("ribbon graph has invalid Euler characteristic");
    return (2 - chi) / 2;
}

namespace {

inline int local_sign(const RibbonGraph& g, const Corner& x, const Corner& y) {
    // x drawn through the vertex center, y pushed off to its own left.
    const int a = 10 * g.slot_of_half[x.in_half];
    const int b = 10 * g.slot_of_half[x.out_half];
    const int u = (10 * g.slot_of_half[y.in_half] + 39) % 40;
    const int w = (10 * g.slot_of_half[y.out_half] + 1) % 40;
    const int rb = (b - a + 40) % 40;
    const int ru = (u - a + 40) % 40;
    const int rw = (w - a + 40) % 40;
    if (ru < rb && rb < rw) return +1;
    if (rw < rb && rb < ru) return -1;
    return 0;
}

}  // namespace

int pair(const CycleWalk& c, const CycleWalk& d) {
    if (c.graph == nullptr || c.graph != d.graph)
        throw std::invalid_argument("pair: cycles live on different ribbon graphs");
    const RibbonGraph& g = *c.graph;
    // Corners are sorted by vertex; merge-join the two lists.
    int total = 0;
    std::size_t i = 0, j = 0;
    while (i < c.corners.size() && j < d.corners.size()) {
        const int vi = c.corners[i].vertex;
        const int vj = d.corners[j].vertex;
        if (vi < vj) {
            ++i;
        } else if (vj < vi) {
            ++j;
        } else {
            std::size_t i_end = i;
            while (i_end < c.corners.size() && c.corners[i_end].vertex == vi) ++i_end;
            std::size_t j_end = j;
            while (j_end < d.corners.size() && d.corners[j_end].vertex == vi) ++j_end;
            for (std::size_t a = i; a < i_end; ++a)
                for (std::size_t b = j; b < j_end; ++b)
                    total += local_sign(g, c.corners[a], d.corners[b]);
            i = i_end;
            j = j_end;
        }
    }
    return total;
}

void CarterSurface::build(const std::vector<Endpoint>& eps, bool long_diagram) {
    long_ = long_diagram;
    const int two_n = static_cast<int>(eps.size());
    const int n = two_n / 2;
    graph_.n_vertices = n;
    graph_.n_arcs = two_n;
    graph_.has_basepoint = long_diagram;
    if (n == 0) return;

    positions_.clear();
    for (int i = 0; i < two_n; ++i) {
        auto& pos = positions_[eps[i].label];
        if (eps[i].passage == Passage::Over)
            pos.first = i;
        else
            pos.second = i;
    }

    graph_.vertex_labels.clear();
    std::map<int, int> vertex_of_label;
    for (const auto& [label, pos] : positions_) {
        vertex_of_label[label] = static_cast<int>(graph_.vertex_labels.size());
        graph_.vertex_labels.push_back(label);
    }
    vertex_of_pos_.assign(two_n, -1);
    for (int i = 0; i < two_n; ++i) vertex_of_pos_[i] = vertex_of_label.at(eps[i].label);

    // Rotation at each crossing. With in/out half-edges of the over and
    // under passages, the cyclic order around the vertex is fixed by the
    // crossing sign; the orientation convention is calibrated once against
    // the Gamma(n) intersection tables and frozen here.
    graph_.rotation.assign(n, {});
    graph_.vertex_of_half.assign(2 * two_n, -1);
    graph_.slot_of_half.assign(2 * two_n, -1);
    for (const auto& [label, pos] : positions_) {
        const int v = vertex_of_label.at(label);
        const int sign = eps[pos.first].sign;
        const int in_over = RibbonGraph::head_half(pos.first);
        const int out_over = RibbonGraph::tail_half((pos.first + 1) % two_n);
        const int in_under = RibbonGraph::head_half(pos.second);
        const int out_under = RibbonGraph::tail_half((pos.second + 1) % two_n);
        if (sign > 0)
            graph_.rotation[v] = {in_over, out_under, out_over, in_under};
        else
            graph_.rotation[v] = {in_over, in_under, out_over, out_under};
        for (int s = 0; s < 4; ++s) {
            const int h = graph_.rotation[v][s];
            graph_.vertex_of_half[h] = v;
            graph_.slot_of_half[h] = s;
        }
    }
}

CarterSurface::CarterSurface(const LongDiagram& d) {
    build(d.endpoints(), true);
}

CarterSurface::CarterSurface(const ClosedDiagram& d) {
    build(d.endpoints(), false);
}

std::pair<int, int> CarterSurface::chord_positions(int label) const {
    auto it = positions_.find(label);
    if (it == positions_.end())
        throw std::out_of_range("unknown chord label " + std::to_string(label));
    return it->second;
}

CycleWalk CarterSurface::range_walk(int first_arc, int last_arc, int corner_label) const {
    const int two_n = graph_.n_arcs;
    CycleWalk w;
    w.graph = &graph_;
    int arc = first_arc;
    while (true) {
        w.arcs.push_back(arc);
        if (arc == last_arc) break;
        const int next = (arc + 1) % two_n;
        w.corners.push_back({vertex_of_pos_[arc], RibbonGraph::head_half(arc),
                             RibbonGraph::tail_half(next)});
        arc = next;
    }
    const auto pos = chord_positions(corner_label);
    const int v = vertex_of_pos_[pos.first];
    w.corners.push_back({v, RibbonGraph::head_half(last_arc),
                         RibbonGraph::tail_half(first_arc)});
    std::sort(w.corners.begin(), w.corners.end(),
              [](const Corner& a, const Corner& b) { return a.vertex < b.vertex; });
    return w;
}

CycleWalk CarterSurface::alpha(int label) const {
    if (!long_) throw std::logic_error("smoothing cycles are defined for long diagrams");
    const auto [over, under] = chord_positions(label);
    const int p = std::min(over, under);
    const int q = std::max(over, under);
    return range_walk(p + 1, q, label);
}

CycleWalk CarterSurface::beta(int label) const {
    if (!long_) throw std::logic_error("smoothing cycles are defined for long diagrams");
    const auto [over, under] = chord_positions(label);
    const int p = std::min(over, under);
    const int q = std::max(over, under);
    return range_walk((q + 1) % graph_.n_arcs, p, label);
}

CycleWalk CarterSurface::gamma() const {
    CycleWalk w;
    w.graph = &graph_;
    const int two_n = graph_.n_arcs;
    for (int arc = 0; arc < two_n; ++arc) {
        w.arcs.push_back(arc);
        w.corners.push_back({vertex_of_pos_[arc], RibbonGraph::head_half(arc),
                             RibbonGraph::tail_half((arc + 1) % two_n)});
    }
    std::sort(w.corners.begin(), w.corners.end(),
              [](const Corner& a, const Corner& b) { return a.vertex < b.vertex; });
    return w;
}

CycleWalk CarterSurface::gamma_over(int label) const {
    const auto [over, under] = chord_positions(label);
    return range_walk((over + 1) % graph_.n_arcs, under, label);
}

CycleWalk CarterSurface::gamma_bar(int label) const {
    const auto [over, under] = chord_positions(label);
    return range_walk((under + 1) % graph_.n_arcs, over, label);
}

int PairingTables::index_of(int label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw std::out_of_range("unknown chord label " + std::to_string(label));
    return static_cast<int>(it - labels.begin());
}

std::string PairingTables::tsv() const {
    std::ostringstream os;
    const auto block = [&](const char* name, const std::vector<std::vector<int>>& m) {
        os << name;
        for (int l : labels) os << '\t' << l;
        os << '\n';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            os << labels[i];
            for (std::size_t j = 0; j < labels.size(); ++j) os << '\t' << m[i][j];
            os << '\n';
        }
    };
    block("A", A);
    block("B", B);
    block("C", C);
    os << "v";
    for (int l : labels) os << '\t' << l;
    os << '\n' << "-";
    for (std::size_t i = 0; i < labels.size(); ++i) os << '\t' << v[i];
    os << '\n';
    return os.str();
}

namespace {

void check_table_identities(const PairingTables& t) {
    const std::size_t n = t.labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (t.B[i][j] != t.v[i] - t.A[i][j] ||
                t.C[i][j] != -t.v[i] + t.v[j] + t.A[i][j])
                throw std::logic_error("pairing tables violate the alpha/beta/gamma identities");
        }
    }
}

template <bool Parallel>
PairingTables tables_impl(const LongDiagram& d) {
    CarterSurface surface(d);
    PairingTables t;
    t.labels = d.labels();
    const int n = static_cast<int>(t.labels.size());
    t.A.assign(n, std::vector<int>(n, 0));
    t.B.assign(n, std::vector<int>(n, 0));
    t.C.assign(n, std::vector<int>(n, 0));
    t.v.assign(n, 0);
    if (n == 0) return t;

    std::vector<CycleWalk> alphas(n), betas(n);
    for (int i = 0; i < n; ++i) {
        alphas[i] = surface.alpha(t.labels[i]);
        betas[i] = surface.beta(t.labels[i]);
    }
    const CycleWalk g = surface.gamma();

    for (int i = 0; i < n; ++i) t.v[i] = pair(alphas[i], g);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && n >= 8)
#endif
    for (int k = 0; k < n * n; ++k) {
        const int i = k / n;
        const int j = k % n;
        t.A[i][j] = pair(alphas[i], alphas[j]);
        t.B[i][j] = pair(alphas[i], betas[j]);
        t.C[i][j] = pair(betas[i], betas[j]);
    }
    check_table_identities(t);
    return t;
}

}  // namespace

PairingTables pairing_tables(const LongDiagram& d) {
    return tables_impl<true>(d);
}

PairingTables pairing_tables_serial(const LongDiagram& d) {
    return tables_impl<false>(d);
}

}  // namespace vknot
