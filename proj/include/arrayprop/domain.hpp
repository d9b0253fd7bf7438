#ifndef ARRAYPROP_DOMAIN_HPP
#define ARRAYPROP_DOMAIN_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arrayprop {

/// Dense id of an interned value token. Ids are only meaningful within
/// the ValueTable of one model.
using ValueId = std::uint32_t;

/// Interns value tokens (symbols such as `p`, or integers written as
/// decimal text) to dense ids. Interning is a bijection: the same token
/// always yields the same id and ids are handed out consecutively.
class ValueTable {
public:
    ValueId intern(std::string_view token);
    std::optional<ValueId> find(std::string_view token) const;
    const std::string& name(ValueId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

    friend bool operator==(const ValueTable&, const ValueTable&) = default;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ValueId> ids_;
};

/// Finite set of values stored as a bit-set over value ids.
///
/// Trailing zero words are always trimmed, so two domains holding the
/// same values compare equal regardless of how they were built.
class Domain {
public:
    Domain() = default;
    Domain(std::initializer_list<ValueId> values);

    template <class Range>
    static Domain from(const Range& values)
    {
        Domain d;
        for (auto v : values)
            d.insert(static_cast<ValueId>(v));
        return d;
    }

    bool contains(ValueId v) const
    {
        auto w = v / 64;
        return w < words_.size() && ((words_[w] >> (v % 64)) & 1u);
    }

    void insert(ValueId v);
    void erase(ValueId v);
    void clear() { words_.clear(); }

    bool empty() const { return words_.empty(); }
    std::size_t size() const;
    std::optional<ValueId> singleton() const;
    ValueId min() const;

    bool intersects(const Domain& other) const;
    bool is_subset_of(const Domain& other) const;

    Domain& operator&=(const Domain& other);
    Domain& operator|=(const Domain& other);
    Domain& operator-=(const Domain& other);

    friend Domain operator&(Domain a, const Domain& b) { return a &= b; }
    friend Domain operator|(Domain a, const Domain& b) { return a |= b; }
    friend Domain operator-(Domain a, const Domain& b) { return a -= b; }
    friend bool operator==(const Domain&, const Domain&) = default;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                auto bit = static_cast<unsigned>(std::countr_zero(bits));
                f(static_cast<ValueId>(w * 64 + bit));
                bits &= bits - 1;
            }
        }
    }

    std::vector<ValueId> values() const;

    /// Renders as `{a, b, c}` using the names in `table`.
    std::string to_string(const ValueTable& table) const;

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

using VarId = std::uint32_t;
inline constexpr VarId kNoVar = static_cast<VarId>(-1);

/// Mutable domain table indexed by VarId.
using DomainTable = std::vector<Domain>;

/// A full assignment, one value per variable, indexed by VarId.
using Assignment = std::vector<ValueId>;

/// Sequence of index values addressing one array cell.
using IndexTuple = std::vector<ValueId>;

} // namespace arrayprop

#endif
