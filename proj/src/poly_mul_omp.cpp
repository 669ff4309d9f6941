#include <vector>

#include <omp.h>

#include "steenrod/polynomial.hpp"

namespace steenrod {

Polynomial poly_mul_parallel(const Polynomial& f, const Polynomial& g, int threads)
{
    if (f.nvars() != g.nvars())
        throw AlgebraError("poly_mul: mismatched variable counts");
    if (!(f.prime() == g.prime()))
        throw AlgebraError("poly_mul: mismatched primes");
    if (threads <= 0)
        threads = omp_get_max_threads();
    const std::uint32_t p = f.prime().value();
    const auto lhs = f.terms();
    const auto rhs = g.terms();
    const auto nl = static_cast<long>(lhs.size());

    std::vector<PolyAccumulator> partial(static_cast<std::size_t>(threads), PolyAccumulator(f.nvars(), f.prime()));

#pragma omp parallel for num_threads(threads) schedule(static)
    for (long i = 0; i < nl; ++i) {
        auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
        const auto& a = lhs[static_cast<std::size_t>(i)];
        for (const auto& b : rhs) {
            auto [sign, mono] = mono_mul(a.mono, b.mono);
            if (sign == 0)
                continue;
            auto c = mod_mul(a.coef, b.coef, p);
            acc.add(mono, sign > 0 ? c : p - c);
        }
    }

    for (std::size_t t = 1; t < partial.size(); ++t)
        partial[0].merge(partial[t]);
    return partial[0].finish();
}

}  // namespace steenrod
