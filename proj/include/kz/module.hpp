#pragma once

#include <memory>
#include <optional>

#include "kz/matrix.hpp"
#include "kz/qring.hpp"
#include "kz/submodule.hpp"

namespace kz {

/// Length of an m-supported invariant. `value` is empty exactly when the
/// quantity is not of finite length at the origin. `nonlocal_support` flags
/// that the global polynomial model carries support away from the origin
/// (the reported value is still the finite local part).
struct LengthResult {
    std::optional<int64_t> value;
    bool finite = true;
    bool nonlocal_support = false;

    int64_t require() const {
        if (!value) throw Error("length is not finite at the origin");
        return *value;
    }
};

struct ResolutionState; // shared, lazily extended; defined with the resolution code

/// Finitely presented module over R = P/I_R: cokernel of `relations` inside
/// P^rank, the quotient block I_R*e_i always folded into the relations.
struct PresentedModule {
    QRPtr qr;
    uint32_t rank = 0;
    Submodule relations;
    std::shared_ptr<ResolutionState> res;

    bool is_zero_rank() const { return rank == 0; }
};

PresentedModule make_module(const QRPtr& qr, uint32_t rank, std::vector<VecElem> rel_gens);
PresentedModule cyclic_module(const QRPtr& qr, const std::vector<Polynomial>& ideal_gens);
PresentedModule cokernel_module(const QRPtr& qr, const PolyMatrix& relations_as_columns);
PresentedModule free_module(const QRPtr& qr, uint32_t rank);
/// the submodule of R^r generated by `gens`, presented abstractly on its
/// generators; with r = 1 this presents an ideal of R as a module
PresentedModule generators_module(const QRPtr& qr, uint32_t ambient_rank,
                                  std::vector<VecElem> gens,
                                  const Guards& g = default_guards());
PresentedModule ideal_as_module(const QRPtr& qr, const std::vector<Polynomial>& gens,
                                const Guards& g = default_guards());

/// ell of Gamma_m(M) = (relations : m^inf)/relations; always finite
LengthResult gamma_m_length(const PresentedModule& M, const Guards& g = default_guards());

class NotTorsionError : public Error {
public:
    using Error::Error;
};

/// ell(L/K) for K <= L <= P^r with L/K annihilated by a power of m; counts
/// standard monomials of the lead module of ker(P^s -> L/K).
/// Throws NotTorsionError when the lead module misses a pure power.
int64_t subquotient_length(const Submodule& K, const Submodule& L,
                           const Guards& g = default_guards());

/// dim_k of the degree-t piece of a graded presented module
int64_t hilbert_function(const PresentedModule& M, int64_t t,
                         const Guards& g = default_guards());

// shared helpers for the homology machinery
// kernel of P^s -> P^r/K, e_j -> target_j (s = #targets)
std::vector<VecElem> kernel_into_quotient(const std::vector<VecElem>& targets,
                                          const std::vector<VecElem>& K_gens, uint32_t ambient,
                                          const Guards& g);
// does the reduced GB's lead module cut out a finite-dimensional quotient?
bool lead_module_zero_dimensional(const std::vector<VecElem>& gb, uint32_t rank, size_t nvars);
int64_t count_standard_monomials(const std::vector<VecElem>& gb, uint32_t rank, size_t nvars);

} // namespace kz
