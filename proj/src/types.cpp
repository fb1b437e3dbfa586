#include "cak/types.hpp"

#include <algorithm>

#include "cak/error.hpp"

namespace cak {

Chirotope::Chirotope(std::vector<Label> labels,
                     const std::function<int(const Label&, const Label&, const Label&)>& sign_of)
    : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        fail(ErrorKind::InvalidInput, "chirotope labels must be distinct");
    const size_t n = labels_.size();
    signs_.assign(n < 3 ? 0 : n * (n - 1) * (n - 2) / 6, 0);
    for (size_t k = 2; k < n; ++k)
        for (size_t j = 1; j < k; ++j)
            for (size_t i = 0; i < j; ++i) {
                const int s = sign_of(labels_[i], labels_[j], labels_[k]);
                if (s != 1 && s != -1)
                    fail(ErrorKind::InvalidInput,
                         "chirotope sign must be nonzero for (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
                signs_[slot(i, j, k)] = static_cast<int8_t>(s);
            }
}

size_t Chirotope::slot(size_t i, size_t j, size_t k) const {
    return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

size_t Chirotope::index_of(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) fail(ErrorKind::InvalidInput, "unknown chirotope label '" + l + "'");
    return static_cast<size_t>(it - labels_.begin());
}

int Chirotope::sign_at(size_t i, size_t j, size_t k) const {
    if (i == j || j == k || i == k) fail(ErrorKind::InvalidInput, "chirotope triple must be distinct");
    int parity = 1;
    if (i > j) { std::swap(i, j); parity = -parity; }
    if (j > k) { std::swap(j, k); parity = -parity; }
    if (i > j) { std::swap(i, j); parity = -parity; }
    return parity * signs_[slot(i, j, k)];
}

void Chirotope::set_sign_sorted(size_t i, size_t j, size_t k, int s) {
    signs_[slot(i, j, k)] = static_cast<int8_t>(s);
}

int Chirotope::sign(const Label& a, const Label& b, const Label& c) const {
    return sign_at(index_of(a), index_of(b), index_of(c));
}

}  // namespace cak
