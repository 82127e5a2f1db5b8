#ifndef FSPLIT_RANDOM_HPP
#define FSPLIT_RANDOM_HPP

#include <cstdint>
#include <random>

#include <fsplit/rational.hpp>

namespace fsplit
{

// Platform-independent draws (std distributions are implementation defined).
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long range(long lo, long hi)
    {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin()
    {
        return (eng_() & 1u) != 0;
    }
    Rational rational(long num_bound = 5, long den_bound = 3)
    {
        return make_rational(range(-num_bound, num_bound), range(1, den_bound));
    }
    Rational nonzero_rational(long num_bound = 5, long den_bound = 3)
    {
        Rational q;
        do {
            q = rational(num_bound, den_bound);
        } while (q == 0);
        return q;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace fsplit

#endif
