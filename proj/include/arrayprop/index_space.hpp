#ifndef ARRAYPROP_INDEX_SPACE_HPP
#define ARRAYPROP_INDEX_SPACE_HPP

#include "arrayprop/model.hpp"

#include <span>

namespace arrayprop {

/// Lazily walks D_{y1} x ... x D_{yn} in lexicographic order of the
/// array's key positions. Values of D_{yk} that are not keys of dimension
/// k are skipped.
class IndexCursor {
public:
    IndexCursor(const ArrayDef& array, std::span<const VarId> index, const DomainTable& domains);

    bool done() const { return done_; }
    void next();

    /// Row-major cell offset of the current tuple.
    std::size_t offset() const { return offset_; }
    ValueId value(std::size_t dim) const { return array_->keys(dim)[current_[dim]]; }
    std::span<const std::uint32_t> positions() const { return current_; }
    IndexTuple tuple() const;

    /// Number of addressable tuples, i.e. the size of the index product.
    std::size_t count() const { return count_; }

private:
    const ArrayDef* array_;
    std::vector<std::vector<std::uint32_t>> choices_;
    std::vector<std::size_t> cursor_;
    std::vector<std::uint32_t> current_;
    std::size_t offset_ = 0;
    std::size_t count_ = 0;
    bool done_ = false;
};

template <class F>
void for_each_addressable(const ArrayDef& array, std::span<const VarId> index,
                          const DomainTable& domains, F&& f)
{
    for (IndexCursor it(array, index, domains); !it.done(); it.next())
        f(it.offset());
}

} // namespace arrayprop

#endif
