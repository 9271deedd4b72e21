#include "spindec/context.hpp"

#include "spindec/error.hpp"

namespace spindec {

GroupContext make_context(int m) {
    if (m < 3) throw DomainError("m must be >= 3");
    GroupContext ctx;
    ctx.m = m;
    ctx.even_spin = m % 2 == 1;
    ctx.n = ctx.even_spin ? (m + 1) / 2 : (m + 2) / 2;
    if (ctx.even_spin) {
        ctx.rs_M = B(ctx.n - 1);
        ctx.rs_Mprime = D(ctx.n - 1);
    } else {
        ctx.rs_M = D(ctx.n - 1);
        ctx.rs_Mprime = B(ctx.n - 2);
    }
    ctx.rho_prime = HalfInt::from_doubled(m);
    return ctx;
}

} // namespace spindec
