#include "hyperflow/derivation.hpp"

#include <mutex>
#include <stdexcept>

namespace hyperflow {

namespace {

Polynomial gen(int row, int index) { return Polynomial::coordinate(Coordinate(row, index)); }

}  // namespace

OpIndex::OpIndex(int k) : k_(k) {
    if (k < 1 || k % 2 == 0) {
        throw std::invalid_argument("OpIndex: operator index must be an odd natural number, got " +
                                    std::to_string(k));
    }
}

Polynomial first_order_image(Coordinate c) {
    const int j = c.index;
    switch (c.row) {
        case 1:
            return gen(2, j);
        case 2:
            return gen(3, j);
        default:
            return (gen(1, 1) * gen(2, j)).scaled(8) + (gen(2, 1) * gen(1, j)).scaled(4) +
                   gen(2, j + 2).scaled(4);
    }
}

Polynomial closed_form_image(OpIndex k, Coordinate c) {
    const int kk = k.value();
    const int j = c.index;
    const int half = (kk - 1) / 2;

    switch (c.row) {
        case 1: {
            // b[2,j+k-1] + sum_s b[2,2s-1] b[1,j+k-2s-1] - sum_s b[1,2s-1] b[2,j+k-2s-1]
            Polynomial out = gen(2, j + kk - 1);
            for (int s = 1; s <= half; ++s) {
                out += gen(2, 2 * s - 1) * gen(1, j + kk - 2 * s - 1);
                out -= gen(1, 2 * s - 1) * gen(2, j + kk - 2 * s - 1);
            }
            return out;
        }
        case 2: {
            // b[3,j+k-1] + sum_s b[3,2s-1] b[1,j+k-2s-1] - sum_s b[1,2s-1] b[3,j+k-2s-1]
            Polynomial out = gen(3, j + kk - 1);
            for (int s = 1; s <= half; ++s) {
                out += gen(3, 2 * s - 1) * gen(1, j + kk - 2 * s - 1);
                out -= gen(1, 2 * s - 1) * gen(3, j + kk - 2 * s - 1);
            }
            return out;
        }
        default: {
            // 4 (2 b[1,1] b[2,j+k-1] + b[2,1] b[1,j+k-1] + b[2,j+k+1])
            //   + 4 sum_s (2 b[1,1] b[2,2s-1] + b[2,1] b[1,2s-1] + b[2,2s+1]) b[1,j+k-2s-1]
            //   + sum_s b[3,2s-1] b[2,j+k-2s-1] - sum_s b[2,2s-1] b[3,j+k-2s-1]
            //   - 4 sum_s b[1,2s-1] (2 b[1,1] b[2,j+k-2s-1] + b[2,1] b[1,j+k-2s-1] + b[2,j+k-2s+1])
            Polynomial out = (gen(1, 1) * gen(2, j + kk - 1)).scaled(8) +
                             (gen(2, 1) * gen(1, j + kk - 1)).scaled(4) + gen(2, j + kk + 1).scaled(4);
            for (int s = 1; s <= half; ++s) {
                const int m = j + kk - 2 * s - 1;
                const Polynomial bracket = (gen(1, 1) * gen(2, 2 * s - 1)).scaled(2) +
                                           gen(2, 1) * gen(1, 2 * s - 1) + gen(2, 2 * s + 1);
                out += (bracket * gen(1, m)).scaled(4);
                out += gen(3, 2 * s - 1) * gen(2, m);
                out -= gen(2, 2 * s - 1) * gen(3, m);
                const Polynomial inner =
                    (gen(1, 1) * gen(2, m)).scaled(2) + gen(2, 1) * gen(1, m) + gen(2, m + 2);
                out -= (gen(1, 2 * s - 1) * inner).scaled(4);
            }
            return out;
        }
    }
}

Derivation::Derivation(OpIndex k) : k_(k), memo_(std::make_shared<Memo>()) {}

const Polynomial& Derivation::image(Coordinate c) const {
    {
        std::shared_lock lock(memo_->mutex);
        const auto it = memo_->images.find(c);
        if (it != memo_->images.end()) return it->second;
    }
    Polynomial computed = k_.value() == 1 ? first_order_image(c) : closed_form_image(k_, c);
    std::unique_lock lock(memo_->mutex);
    // concurrent fills are idempotent; keep whichever entry landed first
    const auto [it, inserted] = memo_->images.try_emplace(c, std::move(computed));
    return it->second;
}

Polynomial Derivation::apply(const Polynomial& p) const {
    return p.derive([this](const Coordinate& c) { return image(c); });
}

Polynomial Derivation::apply_power(Polynomial p, int n) const {
    if (n < 0) throw std::invalid_argument("Derivation: apply_power needs n >= 0");
    for (int i = 0; i < n; ++i) p = apply(p);
    return p;
}

Polynomial commutator_on_generator(const Derivation& dk, const Derivation& dl, Coordinate c) {
    return dk.apply(dl.image(c)) - dl.apply(dk.image(c));
}

bool check_closed_forms(OpIndex k, int j) {
    if (k.value() < 3) {
        throw std::invalid_argument("check_closed_forms: requires k >= 3");
    }
    if (j < 1 || j % 2 == 0) {
        throw std::invalid_argument("check_closed_forms: j must be odd and positive");
    }
    const Derivation d1{OpIndex(1)};
    const Polynomial row1 = closed_form_image(k, Coordinate(1, j));
    const Polynomial row2 = closed_form_image(k, Coordinate(2, j));
    const Polynomial row3 = closed_form_image(k, Coordinate(3, j));
    return row2 == d1.apply(row1) && row3 == d1.apply(row2);
}

}  // namespace hyperflow
