#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wms/configuration.hpp"
#include "wms/exact.hpp"
#include "wms/scheme.hpp"
#include "wms/window.hpp"

namespace wms
{

/// Truncated family B = {b_1 < ... < b_K}, pairwise coprime, each >= 2.
class BFreeBasis
{
  public:
    static BFreeBasis from_moduli(std::vector<std::int64_t> moduli);
    /// Squares of the first k primes.
    static BFreeBasis squarefree(std::size_t k);

    const std::vector<std::int64_t>& moduli() const { return scheme_.moduli(); }
    std::size_t truncation() const { return scheme_.truncation(); }
    const Integer& period() const { return scheme_.period(); }
    const ResidueScheme& scheme() const { return scheme_; }

    /// "squarefree:K" for the preset, "moduli:a,b,c" otherwise.
    const std::string& label() const { return label_; }

  private:
    BFreeBasis(ResidueScheme scheme, std::string label) : scheme_(std::move(scheme)), label_(std::move(label)) {}

    ResidueScheme scheme_;
    std::string label_;
};

bool is_bfree(const BFreeBasis& basis, std::int64_t n);
bool is_bfree(const BFreeBasis& basis, const Integer& n);

/// prod_k (Z/b_k Z \ {0})
ResidueWindow bfree_window(const BFreeBasis& basis);

struct SieveRow
{
    std::int64_t n;
    bool bfree;
};

std::vector<SieveRow> sieve(const BFreeBasis& basis, const IntegerRegion& region);

enum class YStatus
{
    member,
    non_member,
    inconclusive,
};

const char* to_string(YStatus s);

struct ResidueCensus
{
    std::int64_t modulus;
    /// Residues mod b_k met by the support, ascending.
    std::vector<std::int64_t> observed;
    std::int64_t required;
};

struct YVerdict
{
    std::vector<ResidueCensus> censuses;
    YStatus verdict;
    IntegerRegion region;
    bool spans_period;
};

/// The support must miss exactly one residue class mod every b_k. A census of
/// b_k classes is final (points are never removed); otherwise a verdict needs a
/// region of at least one period.
YVerdict y_membership(const BFreeBasis& basis, std::span<const std::int64_t> support, const IntegerRegion& region);
YVerdict y_membership(const BFreeBasis& basis, const ResidueConfiguration& config);

/// (1/P) card{n in [0, P) : n + p is B-free for all p}, by scanning one period.
Rational period_frequency_direct(const BFreeBasis& basis, std::span<const std::int64_t> pattern);
/// prod_k (b_k - |{p mod b_k}|) / b_k
Rational period_frequency_crt(const BFreeBasis& basis, std::span<const std::int64_t> pattern);
/// Both routes; throws if they disagree.
Rational exact_period_frequency(const BFreeBasis& basis, std::span<const std::int64_t> pattern);

} // namespace wms
