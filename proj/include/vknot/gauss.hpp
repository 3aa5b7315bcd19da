#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace vknot {

enum class Passage : std::uint8_t { Over, Under };

/// One over/under token of a Gauss code.
struct Endpoint {
    int label = 0;
    Passage passage = Passage::Over;
    int sign = +1;

    bool operator==(const Endpoint&) const = default;
};

/// A real crossing of a diagram: positions of its two passages in the
/// endpoint sequence, plus its sign.
struct Chord {
    int label = 0;
    int over_pos = -1;
    int under_pos = -1;
    int sign = +1;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A long virtual knot diagram given by its Gauss code: the sequence of
/// over/under passages read along the line from -inf to +inf. Virtual
/// crossings carry no Gauss-code data and are never represented.
class LongDiagram {
public:
    LongDiagram() = default;

    /// Parses whitespace/comma-separated tokens `O<label><sign>` /
    /// `U<label><sign>`. Throws parse_error with the byte offset of the
    /// offending token.
    static LongDiagram parse(const std::string& text);
    static LongDiagram from_endpoints(std::vector<Endpoint> endpoints);

    std::size_t chord_count() const { return chords_.size(); }
    const std::vector<Endpoint>& endpoints() const { return endpoints_; }
    const Chord& chord(int label) const;
    bool has_chord(int label) const { return chords_.count(label) != 0; }
    /// Chord labels in ascending order.
    std::vector<int> labels() const;
    int max_label() const;

    /// 0 if the over passage of chord `label` comes first along the line,
    /// 1 otherwise.
    int crossing_type(int label) const;
    /// omega_a: sum of signs of the type-a chords. a must be 0 or 1.
    int writhe(int a) const;

    /// D^#: over/under flipped and every sign negated at every crossing.
    LongDiagram switch_all() const;
    /// -D: endpoint sequence reversed; passages and signs unchanged.
    LongDiagram reversed() const;
    /// D^*: all signs negated; sequence and passages unchanged.
    LongDiagram mirrored() const;
    /// Crossing change at one chord: O/U swapped, sign negated.
    LongDiagram crossing_change(int label) const;
    /// Virtualization: the chord is deleted outright.
    LongDiagram virtualized(int label) const;
    /// Crossing change applied at every type-1 chord; result has I_1 empty.
    LongDiagram descending() const;
    /// Same knot with omega_0 = omega_1 = 0, obtained by appending
    /// canceling kinks at the right end.
    LongDiagram untwisted() const;

    /// Relabels chords 1..n in order of first appearance.
    LongDiagram canonical() const;

    /// Gauss-code text with the stored labels; parse(code()) == *this.
    std::string code() const;

    nlohmann::ordered_json to_json() const;
    static LongDiagram from_json(const nlohmann::json& j);

    bool operator==(const LongDiagram& rhs) const { return endpoints_ == rhs.endpoints_; }
    bool operator!=(const LongDiagram& rhs) const { return !(*this == rhs); }

private:
    void rebuild_chords();

    std::vector<Endpoint> endpoints_;
    std::map<int, Chord> chords_;
};

/// Concatenation D = lhs then rhs, with rhs chord labels shifted past
/// lhs's maximum label.
LongDiagram product(const LongDiagram& lhs, const LongDiagram& rhs);

/// A virtual knot diagram: the same token structure, cyclically ordered.
/// Equality is up to cyclic rotation.
class ClosedDiagram {
public:
    ClosedDiagram() = default;
    static ClosedDiagram from_endpoints(std::vector<Endpoint> endpoints);

    std::size_t chord_count() const { return chords_.size(); }
    const std::vector<Endpoint>& endpoints() const { return endpoints_; }
    const Chord& chord(int label) const;
    std::vector<int> labels() const;
    /// Total writhe: sum of all crossing signs.
    int total_writhe() const;

    bool operator==(const ClosedDiagram& rhs) const;
    bool operator!=(const ClosedDiagram& rhs) const { return !(*this == rhs); }

private:
    void rebuild_chords();

    std::vector<Endpoint> endpoints_;
    std::map<int, Chord> chords_;
};

/// Identifies -inf with +inf.
ClosedDiagram closure(const LongDiagram& d);

}  // namespace vknot
