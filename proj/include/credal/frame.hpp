#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace credal {

/// Thrown when combined knowledge is self-contradictory (an empty credal
/// set); the CLI maps this to its own exit code.
struct ContradictionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite frame of discernment: an ordered list of atom names.
/// Subsets are represented as bitmasks (bit i = atom i present), which
/// caps the frame at 16 atoms.
class Frame {
public:
    static constexpr int kMaxAtoms = 16;

    explicit Frame(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
        if (atoms_.size() < 2)
            throw std::invalid_argument("Frame: need at least 2 atoms");
        if (atoms_.size() > kMaxAtoms)
            throw std::invalid_argument("Frame: at most 16 atoms supported");
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            if (atoms_[i].empty())
                throw std::invalid_argument("Frame: empty atom name");
            for (std::size_t j = i + 1; j < atoms_.size(); ++j)
                if (atoms_[i] == atoms_[j])
                    throw std::invalid_argument("Frame: duplicate atom name '" + atoms_[i] + "'");
        }
    }

    int size() const { return static_cast<int>(atoms_.size()); }
    std::uint32_t num_subsets() const { return 1u << size(); }
    std::uint32_t full_mask() const { return num_subsets() - 1; }

    const std::string& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& atoms() const { return atoms_; }

    int index(std::string_view name) const {
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (atoms_[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("Frame: unknown atom '" + std::string(name) + "'");
    }

    /// Parse "A+B" style subset names; "{}" denotes the empty set.
    std::uint32_t mask_of(std::string_view name) const {
        if (name == "{}") return 0;
        std::uint32_t mask = 0;
        std::size_t start = 0;
        while (start <= name.size()) {
            std::size_t plus = name.find('+', start);
            std::string_view part = (plus == std::string_view::npos)
                                        ? name.substr(start)
                                        : name.substr(start, plus - start);
            mask |= 1u << index(part);
            if (plus == std::string_view::npos) break;
            start = plus + 1;
        }
        return mask;
    }

    /// "+"-joined atom names in frame order; the empty set prints as "{}".
    std::string name_of(std::uint32_t mask) const {
        if (mask == 0) return "{}";
        std::string out;
        for (int i = 0; i < size(); ++i) {
            if (mask & (1u << i)) {
                if (!out.empty()) out += '+';
                out += atoms_[static_cast<std::size_t>(i)];
            }
        }
        return out;
    }

    bool operator==(const Frame& other) const { return atoms_ == other.atoms_; }
    bool operator!=(const Frame& other) const { return !(*this == other); }

private:
    std::vector<std::string> atoms_;
};

inline int popcount_mask(std::uint32_t m) { return __builtin_popcount(m); }

}  // namespace credal
