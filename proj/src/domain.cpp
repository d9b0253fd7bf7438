#include "arrayprop/domain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace arrayprop {

ValueId ValueTable::intern(std::string_view token)
{
    std::string key(token);
    if (auto it = ids_.find(key); it != ids_.end())
        return it->second;
    auto id = static_cast<ValueId>(names_.size());
    names_.push_back(key);
    ids_.emplace(std::move(key), id);
    return id;
}

std::optional<ValueId> ValueTable::find(std::string_view token) const
{
    if (auto it = ids_.find(std::string(token)); it != ids_.end())
        return it->second;
    return std::nullopt;
}

Domain::Domain(std::initializer_list<ValueId> values)
{
    for (auto v : values)
        insert(v);
}

void Domain::insert(ValueId v)
{
    auto w = v / 64;
    if (w >= words_.size())
        words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v % 64);
}

void Domain::erase(ValueId v)
{
    auto w = v / 64;
    if (w >= words_.size())
        return;
    words_[w] &= ~(std::uint64_t{1} << (v % 64));
    trim();
}

std::size_t Domain::size() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<ValueId> Domain::singleton() const
{
    if (words_.empty())
        return std::nullopt;
    std::size_t hits = 0;
    std::size_t at = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] == 0)
            continue;
        if (++hits > 1 || std::popcount(words_[w]) != 1)
            return std::nullopt;
        at = w;
    }
    return static_cast<ValueId>(at * 64 + static_cast<unsigned>(std::countr_zero(words_[at])));
}

ValueId Domain::min() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return static_cast<ValueId>(w * 64 + static_cast<unsigned>(std::countr_zero(words_[w])));
    throw std::logic_error("min() of empty domain");
}

bool Domain::intersects(const Domain& other) const
{
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w)
        if ((words_[w] & other.words_[w]) != 0)
            return true;
    return false;
}

bool Domain::is_subset_of(const Domain& other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto theirs = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~theirs) != 0)
            return false;
    }
    return true;
}

Domain& Domain::operator&=(const Domain& other)
{
    if (words_.size() > other.words_.size())
        words_.resize(other.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    trim();
    return *this;
}

Domain& Domain::operator|=(const Domain& other)
{
    if (words_.size() < other.words_.size())
        words_.resize(other.words_.size(), 0);
    for (std::size_t w = 0; w < other.words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

Domain& Domain::operator-=(const Domain& other)
{
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w)
        words_[w] &= ~other.words_[w];
    trim();
    return *this;
}

std::vector<ValueId> Domain::values() const
{
    std::vector<ValueId> out;
    out.reserve(size());
    for_each([&](ValueId v) { out.push_back(v); });
    return out;
}

std::string Domain::to_string(const ValueTable& table) const
{
    std::string out = "{";
    bool first = true;
    for_each([&](ValueId v) {
        if (!first)
            out += ", ";
        out += table.name(v);
        first = false;
    });
    out += "}";
    return out;
}

void Domain::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

} // namespace arrayprop
