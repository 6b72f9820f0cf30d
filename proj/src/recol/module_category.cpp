#include "recol/module_category.hpp"

namespace stratakit::recol {

using mod::ModuleMap;

ModuleMap ModuleCategory::inverse(const ModuleMap& f) const {
  auto inv = f.matrix().inverse();
  if (f.source().dim() != f.target().dim() || !inv) throw RecollementError("morphism is not invertible");
  return {f.target(), f.source(), *inv};
}

KernelOf<mod::Module, ModuleMap> ModuleCategory::kernel(const ModuleMap& f) const {
  auto k = mod::kernel(f);
  return {k.module, k.inclusion};
}

KernelOf<mod::Module, ModuleMap> ModuleCategory::cokernel(const ModuleMap& f) const {
  auto c = mod::cokernel(f);
  return {c.module, c.projection};
}

ImageOf<mod::Module, ModuleMap> ModuleCategory::image(const ModuleMap& f) const {
  auto im = mod::image(f);
  return {im.module, im.coimage, im.inclusion};
}

ModuleMap ModuleCategory::factor_through_mono(const ModuleMap& mono, const ModuleMap& f) const {
  return {f.source(), mono.source(), mod::coordinates_in(mono.matrix(), f.matrix())};
}

std::string ModuleCategory::describe(const mod::Module& x) const {
  std::string s = "dim " + std::to_string(x.dim()) + " (";
  auto dv = x.dimension_vector();
  for (std::size_t i = 0; i < dv.size(); ++i) s += (i ? "," : "") + std::to_string(dv[i]);
  return s + ")";
}

}  // namespace stratakit::recol
