// closure.hpp -- union-closure kernels.
//
// closure_kernel_serial is the plain fixpoint reference; closure_kernel_parallel
// is the frontier-based production kernel (OpenMP when available). Both return
// the closure as a canonically sorted vector that always contains the empty set,
// and both fail loudly when the configured cap is exceeded.
#pragma once

#include <cstddef>
#include <vector>

#include "ucc/bitset128.hpp"

namespace ucc {

constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 22;

struct ClosureOptions {
    std::size_t cap = kDefaultClosureCap;
    bool parallel = true;
};

std::vector<Mask> closure_kernel_serial(const std::vector<Mask>& generators,
                                        std::size_t cap = kDefaultClosureCap);

std::vector<Mask> closure_kernel_parallel(const std::vector<Mask>& generators,
                                          std::size_t cap = kDefaultClosureCap);

}  // namespace ucc
