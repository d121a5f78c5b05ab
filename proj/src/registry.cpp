#include "skewcal/registry.hpp"

namespace skewcal {

const std::vector<RegistryEntry>& builtin_examples() {
  static const std::vector<RegistryEntry> entries = {
      {"trivial-abelian",
       "rank-1 bundle with zero anchor and zero bracket",
       "lie", true,
       "[chart]\n"
       "coords = x\n"
       "\n"
       "[algebroid]\n"
       "rank = 1\n"},

      {"aff1-point",
       "affine Lie algebra of the line, zero anchor over a one-coordinate "
       "chart",
       "lie", true,
       "[chart]\n"
       "coords = s\n"
       "\n"
       "[algebroid]\n"
       "rank = 2\n"
       "structure.1.2.2 = 1\n"},

      {"tm-r2-flat-poisson",
       "constant Poisson bivector on the tangent plane with the euclidean "
       "cometric",
       "compat", true,
       "[chart]\n"
       "coords = x,y\n"
       "\n"
       "[jacobi]\n"
       "pi.1.2 = 1\n"
       "\n"
       "[metric]\n"
       "carrier = Adual\n"
       "gram.1.1 = 1\n"
       "gram.2.2 = 1\n"},

      {"contact-r3",
       "standard contact form dz - y dx on three-space",
       "jacobi", true,
       "[chart]\n"
       "coords = x,y,z\n"
       "\n"
       "[contact]\n"
       "eta.1 = -y\n"
       "eta.3 = 1\n"},

      {"heisenberg-sasaki",
       "Sasakian tuple on the Heisenberg group in Darboux coordinates",
       "theorem38", true,
       "[chart]\n"
       "coords = x,y,z\n"
       "\n"
       "[sasaki]\n"
       "q = 0\n"
       "phi.1.2 = -1\n"
       "phi.2.1 = 1\n"
       "phi.3.2 = -y\n"
       "xi.3 = 1\n"
       "eta.1 = -y\n"
       "eta.3 = 1\n"
       "g.1.1 = 1+y^2\n"
       "g.1.3 = -y\n"
       "g.2.2 = 1\n"
       "g.3.3 = 1\n"},

      {"broken-jacobiator",
       "skew algebroid whose jacobiator and anchor-morphism checks fail by "
       "design",
       "lie", false,
       "[chart]\n"
       "coords = x,y,z\n"
       "\n"
       "[algebroid]\n"
       "rank = 3\n"
       "anchor.1.1 = 1\n"
       "anchor.2.2 = 1\n"
       "anchor.3.1 = 1\n"
       "structure.1.2.3 = x\n"
       "structure.1.3.2 = 1\n"},

      {"nonjacobi-phi0",
       "bivector with a non-closed twist cosection; the cocycle check fails "
       "by design",
       "jacobi", false,
       "[chart]\n"
       "coords = x,y\n"
       "\n"
       "[jacobi]\n"
       "phi0.2 = x\n"
       "pi.1.2 = 1\n"},
  };
  return entries;
}

const RegistryEntry* find_example(const std::string& name) {
  for (const auto& e : builtin_examples())
    if (e.name == name) return &e;
  return nullptr;
}

} // namespace skewcal
