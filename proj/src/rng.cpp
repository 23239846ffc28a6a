#include "dom/rng.hpp"

#include <stdexcept>

namespace dom {

std::uint64_t bernoulli_threshold(const Rat& p) {
    if (sgn(p) <= 0 || p >= 1) throw std::invalid_argument("edge probability must satisfy 0 < p < 1");
    mpz_class scaled = p.get_num() << 64;
    scaled /= p.get_den();  // floor
    // p < 1 guarantees the quotient fits in 64 bits
    std::uint64_t t = 0;
    mpz_export(&t, nullptr, -1, sizeof(t), 0, 0, scaled.get_mpz_t());
    return t;
}

}  // namespace dom
