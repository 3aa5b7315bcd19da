#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vknot {

namespace {

void validate(const std::vector<Endpoint>& endpoints) {
    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        const Endpoint& e = endpoints[i];
        if (e.label <= 0) throw std::invalid_argument("chord labels must be positive");
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        by_label[e.label].push_back(i);
    }
    for (const auto& [label, occ] : by_label) {
        if (occ.size() != 2)
            throw std::invalid_argument("label " + std::to_string(label) + " occurs " +
                                        std::to_string(occ.size()) + " times, expected 2");
        const Endpoint& a = endpoints[occ[0]];
        const Endpoint& b = endpoints[occ[1]];
        if (a.passage == b.passage)
            throw std::invalid_argument("label " + std::to_string(label) +
                                        " has two " + (a.passage == Passage::Over ? "O" : "U") +
                                        " tokens");
        if (a.sign != b.sign)
            throw std::invalid_argument("label " + std::to_string(label) +
                                        " carries mismatched signs");
    }
}

}  // namespace

void LongDiagram::rebuild_chords() {
    chords_.clear();
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
        const Endpoint& e = endpoints_[i];
        Chord& c = chords_[e.label];
        c.label = e.label;
        c.sign = e.sign;
        (e.passage == Passage::Over ? c.over_pos : c.under_pos) = static_cast<int>(i);
    }
}

LongDiagram LongDiagram::from_endpoints(std::vector<Endpoint> endpoints) {
    validate(endpoints);
    LongDiagram d;
    d.endpoints_ = std::move(endpoints);
    d.rebuild_chords();
    return d;
}

LongDiagram LongDiagram::parse(const std::string& text) {
    std::vector<Endpoint> endpoints;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        const std::size_t tok_start = i;
        Endpoint e;
        if (text[i] == 'O') {
            e.passage = Passage::Over;
        } else if (text[i] == 'U') {
            e.passage = Passage::Under;
        } else {
            throw parse_error("expected 'O' or 'U'", tok_start);
        }
        ++i;
        std::size_t digits = 0;
        long label = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000) throw parse_error("label out of range", tok_start);
            ++i;
            ++digits;
        }
        if (digits == 0) throw parse_error("expected label digits", tok_start);
        if (label == 0) throw parse_error("labels must be positive", tok_start);
        if (i >= n || (text[i] != '+' && text[i] != '-'))
            throw parse_error("expected sign '+' or '-'", tok_start);
        e.sign = text[i] == '+' ? +1 : -1;
        ++i;
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
            throw parse_error("trailing characters in token", tok_start);
        e.label = static_cast<int>(label);
        endpoints.push_back(e);
    }
    try {
        return from_endpoints(std::move(endpoints));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what(), 0);
    }
}

const Chord& LongDiagram::chord(int label) const {
    auto it = chords_.find(label);
    if (it == chords_.end())
        throw std::out_of_range("unknown chord label " + std::to_string(label));
    return it->second;
}

std::vector<int> LongDiagram::labels() const {
    std::vector<int> out;
    out.reserve(chords_.size());
    for (const auto& [label, c] : chords_) out.push_back(label);
    return out;
}

int LongDiagram::max_label() const {
    return chords_.empty() ? 0 : chords_.rbegin()->first;
}

int LongDiagram::crossing_type(int label) const {
    const Chord& c = chord(label);
    return c.over_pos < c.under_pos ? 0 : 1;
}

int LongDiagram::writhe(int a) const {
    if (a != 0 && a != 1) throw std::invalid_argument("writhe: a must be 0 or 1");
    int sum = 0;
    for (const auto& [label, c] : chords_)
        if (crossing_type(label) == a) sum += c.sign;
    return sum;
}

LongDiagram LongDiagram::switch_all() const {
    std::vector<Endpoint> eps = endpoints_;
    for (Endpoint& e : eps) {
        e.passage = e.passage == Passage::Over ? Passage::Under : Passage::Over;
        e.sign = -e.sign;
    }
    return from_endpoints(std::move(eps));
}

LongDiagram LongDiagram::reversed() const {
    std::vector<Endpoint> eps(endpoints_.rbegin(), endpoints_.rend());
    return from_endpoints(std::move(eps));
}

LongDiagram LongDiagram::mirrored() const {
    std::vector<Endpoint> eps = endpoints_;
    for (Endpoint& e : eps) e.sign = -e.sign;
    return from_endpoints(std::move(eps));
}

LongDiagram LongDiagram::crossing_change(int label) const {
    chord(label);  // label check
    std::vector<Endpoint> eps = endpoints_;
    for (Endpoint& e : eps) {
        if (e.label == label) {
            e.passage = e.passage == Passage::Over ? Passage::Under : Passage::Over;
            e.sign = -e.sign;
        }
    }
    return from_endpoints(std::move(eps));
}

LongDiagram LongDiagram::virtualized(int label) const {
    chord(label);
    std::vector<Endpoint> eps;
    eps.reserve(endpoints_.size() - 2);
    for (const Endpoint& e : endpoints_)
        if (e.label != label) eps.push_back(e);
    return from_endpoints(std::move(eps));
}

LongDiagram LongDiagram::descending() const {
    LongDiagram d = *this;
    for (int label : labels())
        if (d.crossing_type(label) == 1) d = d.crossing_change(label);
    return d;
}

LongDiagram LongDiagram::untwisted() const {
    std::vector<Endpoint> eps = endpoints_;
    int next = max_label();
    // |omega_a| kinks of type a and opposite sign, appended after the last
    // endpoint.
    for (int a : {0, 1}) {
        int w = writhe(a);
        const int sign = w > 0 ? -1 : +1;
        const Passage first = a == 0 ? Passage::Over : Passage::Under;
        const Passage second = a == 0 ? Passage::Under : Passage::Over;
        for (int k = std::abs(w); k > 0; --k) {
            ++next;
            eps.push_back({next, first, sign});
            eps.push_back({next, second, sign});
        }
    }
    return from_endpoints(std::move(eps));
}

LongDiagram LongDiagram::canonical() const {
    std::map<int, int> relabel;
    int next = 0;
    for (const Endpoint& e : endpoints_)
        if (relabel.emplace(e.label, next + 1).second) ++next;
    std::vector<Endpoint> eps = endpoints_;
    for (Endpoint& e : eps) e.label = relabel.at(e.label);
    return from_endpoints(std::move(eps));
}

std::string LongDiagram::code() const {
    std::ostringstream os;
    bool first = true;
    for (const Endpoint& e : endpoints_) {
        if (!first) os << ' ';
        os << (e.passage == Passage::Over ? 'O' : 'U') << e.label
           << (e.sign > 0 ? '+' : '-');
        first = false;
    }
    return os.str();
}

nlohmann::ordered_json LongDiagram::to_json() const {
    nlohmann::ordered_json eps = nlohmann::ordered_json::array();
    for (const Endpoint& e : endpoints_) {
        nlohmann::ordered_json t;
        t["label"] = e.label;
        t["passage"] = e.passage == Passage::Over ? "O" : "U";
        t["sign"] = e.sign;
        eps.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["endpoints"] = std::move(eps);
    return j;
}

LongDiagram LongDiagram::from_json(const nlohmann::json& j) {
    std::vector<Endpoint> eps;
    for (const auto& t : j.at("endpoints")) {
        Endpoint e;
        e.label = t.at("label").get<int>();
        const std::string p = t.at("passage").get<std::string>();
        if (p != "O" && p != "U") throw std::invalid_argument("passage must be \"O\" or \"U\"");
        e.passage = p == "O" ? Passage::Over : Passage::Under;
        e.sign = t.at("sign").get<int>();
        eps.push_back(e);
    }
    return from_endpoints(std::move(eps));
}

LongDiagram product(const LongDiagram& lhs, const LongDiagram& rhs) {
    std::vector<Endpoint> eps = lhs.endpoints();
    const int shift = lhs.max_label();
    for (Endpoint e : rhs.endpoints()) {
        e.label += shift;
        eps.push_back(e);
    }
    return LongDiagram::from_endpoints(std::move(eps));
}

void ClosedDiagram::rebuild_chords() {
    chords_.clear();
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
        const Endpoint& e = endpoints_[i];
        Chord& c = chords_[e.label];
        c.label = e.label;
        c.sign = e.sign;
        (e.passage == Passage::Over ? c.over_pos : c.under_pos) = static_cast<int>(i);
    }
}

ClosedDiagram ClosedDiagram::from_endpoints(std::vector<Endpoint> endpoints) {
    validate(endpoints);
    ClosedDiagram d;
    d.endpoints_ = std::move(endpoints);
    d.rebuild_chords();
    return d;
}

const Chord& ClosedDiagram::chord(int label) const {
    auto it = chords_.find(label);
    if (it == chords_.end())
        throw std::out_of_range("unknown chord label " + std::to_string(label));
    return it->second;
}

std::vector<int> ClosedDiagram::labels() const {
    std::vector<int> out;
    out.reserve(chords_.size());
    for (const auto& [label, c] : chords_) out.push_back(label);
    return out;
}

int ClosedDiagram::total_writhe() const {
    int sum = 0;
    for (const auto& [label, c] : chords_) sum += c.sign;
    return sum;
}

bool ClosedDiagram::operator==(const ClosedDiagram& rhs) const {
    const std::size_t n = endpoints_.size();
    if (n != rhs.endpoints_.size()) return false;
    if (n == 0) return true;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            match = endpoints_[i] == rhs.endpoints_[(i + shift) % n];
        if (match) return true;
    }
    return false;
}

ClosedDiagram closure(const LongDiagram& d) {
    return ClosedDiagram::from_endpoints(d.endpoints());
}

}  // namespace vknot
