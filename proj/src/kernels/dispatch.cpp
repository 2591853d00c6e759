#include <cstdlib>
#include <string_view>

#include "ogc/kernels.hpp"

namespace ogc::kernels {

namespace {

const KernelSet kScalar{"scalar", detail::scalar_xor, detail::scalar_addmod, detail::scalar_table,
                        detail::scalar_count};

}  // namespace

const KernelSet& scalar() { return kScalar; }

const KernelSet* avx2() {
#if defined(OGC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? detail::avx2_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon() {
#if defined(OGC_HAVE_NEON_KERNELS)
  return detail::neon_set();
#else
  return nullptr;
#endif
}

const KernelSet& best() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("OGC_KERNELS");
    if (env && std::string_view(env) == "scalar") return &kScalar;
    if (const KernelSet* k = avx2()) return k;
    if (const KernelSet* k = neon()) return k;
    return &kScalar;
  }();
  return *chosen;
}

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&kScalar};
  if (const KernelSet* k = avx2()) out.push_back(k);
  if (const KernelSet* k = neon()) out.push_back(k);
  return out;
}

}  // namespace ogc::kernels
