#pragma once

#include <memory>
#include <vector>

#include "ocring/value.hpp"

namespace ocring {

// Configuration of the coefficient ring O = W(F_{p^f}) and of the S-degree
// window used by series arithmetic.
struct RingConfig {
    long p = 3;
    long f = 1;
    long Np = 64; // coefficient precision in p-adic digits (f > 1 and iterative algorithms)
    long Ns = 64; // S-degree window [S^-Ns, S^Ns]
    std::vector<long> conway_lift; // monic degree-f polynomial defining W(F_{p^f}) for f > 1

    void validate() const {
        if (!is_prime(p)) throw std::domain_error("RingConfig: p must be prime");
        if (f < 1) throw std::domain_error("RingConfig: f >= 1 required");
        if (Np < 1 || Ns < 1) throw std::domain_error("RingConfig: Np, Ns >= 1 required");
        if (f > 1) {
            if ((long)conway_lift.size() != f + 1 || conway_lift.back() != 1)
                throw std::domain_error("RingConfig: conway_lift must be monic of degree f");
        }
    }
};

using ConfigPtr = std::shared_ptr<const RingConfig>;

inline ConfigPtr make_config(long p, long f = 1, long Np = 64, long Ns = 64,
                             std::vector<long> conway = {}) {
    auto c = std::make_shared<RingConfig>();
    c->p = p; c->f = f; c->Np = Np; c->Ns = Ns; c->conway_lift = std::move(conway);
    c->validate();
    return c;
}

} // namespace ocring
