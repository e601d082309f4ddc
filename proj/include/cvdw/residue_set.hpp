#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cvdw {

using Residue = std::int64_t;

/// Non-negative representative of x mod n.
constexpr Residue reduce(Residue x, Residue n) {
    const Residue r = x % n;
    return r < 0 ? r + n : r;
}

/// A subset of Z_N stored as strictly increasing representatives in [0, N).
class ResidueSet {
public:
    ResidueSet() = default;

    /// Takes already-canonical elements; throws InvalidArgument unless they
    /// are strictly increasing and inside [0, modulus).
    ResidueSet(Residue modulus, std::vector<Residue> sorted_elements);

    /// Reduces, sorts and deduplicates arbitrary integers.
    static ResidueSet from_values(Residue modulus, std::span<const Residue> values);
    static ResidueSet full(Residue modulus);

    Residue modulus() const noexcept { return modulus_; }
    std::span<const Residue> elements() const noexcept { return elements_; }
    const std::vector<Residue>& values() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool contains(Residue r) const;
    bool is_subset_of(const ResidueSet& other) const;
    bool intersects(const ResidueSet& other) const;

    ResidueSet complement() const;
    ResidueSet united(const ResidueSet& other) const;
    ResidueSet minus(const ResidueSet& other) const;
    ResidueSet intersected(const ResidueSet& other) const;

    /// Dense membership table of length modulus().
    std::vector<char> membership() const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
    friend auto operator<=>(const ResidueSet&, const ResidueSet&) = default;

private:
    Residue modulus_ = 1;
    std::vector<Residue> elements_;
};

/// "14,29,42,43,44"; the empty set renders as "".
std::string format_residues(std::span<const Residue> values);
inline std::string format_residues(const ResidueSet& s) { return format_residues(s.elements()); }

/// "{1,2}" style used in human-readable output.
std::string format_braced(std::span<const Residue> values);

/// Parses the comma-separated form. Requires strictly increasing values in
/// [0, modulus); whitespace around items is ignored.
ResidueSet parse_residues(std::string_view text, Residue modulus);

}  // namespace cvdw
