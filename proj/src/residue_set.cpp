#include "cvdw/residue_set.hpp"

#include "cvdw/errors.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

namespace cvdw {

ResidueSet::ResidueSet(Residue modulus, std::vector<Residue> sorted_elements)
    : modulus_(modulus), elements_(std::move(sorted_elements)) {
    if (modulus_ < 1) throw InvalidArgument("residue set modulus must be positive");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 0 || elements_[i] >= modulus_)
            throw InvalidArgument("residue " + std::to_string(elements_[i]) + " outside [0, " +
                                  std::to_string(modulus_ - 1) + "]");
        if (i > 0 && elements_[i] <= elements_[i - 1])
            throw InvalidArgument("residues must be strictly increasing");
    }
}

ResidueSet ResidueSet::from_values(Residue modulus, std::span<const Residue> values) {
    if (modulus < 1) throw InvalidArgument("residue set modulus must be positive");
    std::vector<Residue> v;
    v.reserve(values.size());
    for (Residue x : values) v.push_back(reduce(x, modulus));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return ResidueSet(modulus, std::move(v));
}

ResidueSet ResidueSet::full(Residue modulus) {
    std::vector<Residue> v(static_cast<std::size_t>(modulus));
    for (Residue i = 0; i < modulus; ++i) v[static_cast<std::size_t>(i)] = i;
    return ResidueSet(modulus, std::move(v));
}

bool ResidueSet::contains(Residue r) const {
    return std::binary_search(elements_.begin(), elements_.end(), r);
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

bool ResidueSet::intersects(const ResidueSet& other) const {
    auto a = elements_.begin();
    auto b = other.elements_.begin();
    while (a != elements_.end() && b != other.elements_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

ResidueSet ResidueSet::complement() const { return full(modulus_).minus(*this); }

ResidueSet ResidueSet::united(const ResidueSet& other) const {
    std::vector<Residue> out;
    std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                   other.elements_.end(), std::back_inserter(out));
    return ResidueSet(modulus_, std::move(out));
}

ResidueSet ResidueSet::minus(const ResidueSet& other) const {
    std::vector<Residue> out;
    std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                        other.elements_.end(), std::back_inserter(out));
    return ResidueSet(modulus_, std::move(out));
}

ResidueSet ResidueSet::intersected(const ResidueSet& other) const {
    std::vector<Residue> out;
    std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(),
                          other.elements_.end(), std::back_inserter(out));
    return ResidueSet(modulus_, std::move(out));
}

std::vector<char> ResidueSet::membership() const {
    std::vector<char> table(static_cast<std::size_t>(modulus_), 0);
    for (Residue r : elements_) table[static_cast<std::size_t>(r)] = 1;
    return table;
}

std::string format_residues(std::span<const Residue> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_braced(std::span<const Residue> values) {
    return "{" + format_residues(values) + "}";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

ResidueSet parse_residues(std::string_view text, Residue modulus) {
    std::vector<Residue> values;
    text = trim(text);
    if (text.empty()) return ResidueSet(modulus, {});
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        Residue value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw InvalidArgument("malformed residue '" + std::string(item) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return ResidueSet(modulus, std::move(values));
}

}  // namespace cvdw
