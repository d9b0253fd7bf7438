#include "arrayprop/index_space.hpp"

#include <algorithm>

namespace arrayprop {

IndexCursor::IndexCursor(const ArrayDef& array, std::span<const VarId> index, const DomainTable& domains)
    : array_(&array)
{
    const auto n = index.size();
    choices_.resize(n);
    count_ = n == 0 ? 0 : 1;
    for (std::size_t d = 0; d < n; ++d) {
        domains[index[d]].for_each([&](ValueId v) {
            if (auto p = array.position(d, v))
                choices_[d].push_back(*p);
        });
        std::sort(choices_[d].begin(), choices_[d].end());
        count_ *= choices_[d].size();
    }
    if (count_ == 0) {
        done_ = true;
        return;
    }
    cursor_.assign(n, 0);
    current_.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
        current_[d] = choices_[d][0];
        offset_ += current_[d] * array.stride(d);
    }
}

void IndexCursor::next()
{
    for (std::size_t d = choices_.size(); d-- > 0;) {
        offset_ -= current_[d] * array_->stride(d);
        if (++cursor_[d] < choices_[d].size()) {
            current_[d] = choices_[d][cursor_[d]];
            offset_ += current_[d] * array_->stride(d);
            return;
        }
        cursor_[d] = 0;
        current_[d] = choices_[d][0];
        offset_ += current_[d] * array_->stride(d);
    }
    done_ = true;
}

IndexTuple IndexCursor::tuple() const
{
    IndexTuple t(current_.size());
    for (std::size_t d = 0; d < current_.size(); ++d)
        t[d] = value(d);
    return t;
}

} // namespace arrayprop
