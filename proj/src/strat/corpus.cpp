#include "strat/corpus.hpp"

#include "algcore/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace stratakit::strat {

std::vector<NamedStratification> fixture_stratifications(const la::Field& f) {
  std::vector<NamedStratification> out;
  for (const auto& fx : alg::fixture_names()) {
    Algebra a = alg::fixture_algebra(fx, f);
    const auto& names = a.vertex_names();
    const std::size_t n = names.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::string> chain;
      std::string label;
      for (auto v : perm) {
        chain.push_back(names[v]);
        label += (label.empty() ? "" : "<") + names[v];
      }
      // element i of the chain poset is vertex perm[i]
      std::vector<std::size_t> rho(n);
      for (std::size_t i = 0; i < n; ++i) rho[perm[i]] = i;
      out.push_back({fx + ":" + label, fx, Stratification(a, Poset::chain(chain), rho)});
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.push_back({fx + ":trivial", fx, Stratification(a, Poset({"*"}, {}), std::vector<std::size_t>(n, 0))});
    if (fx == "A3") {
      for (bool up : {true, false}) {
        Poset p({"x", "y"}, {up ? std::pair<std::string, std::string>{"x", "y"} : std::pair<std::string, std::string>{"y", "x"}});
        out.push_back({std::string("A3:{1,3}") + (up ? "<" : ">") + "{2}", fx, Stratification(a, p, {0, 1, 0})});
      }
    }
  }
  return out;
}

std::vector<NamedStratification> chain_labelings(const std::string& fixture, const la::Field& f) {
  Algebra a = alg::fixture_algebra(fixture, f);
  const auto& names = a.vertex_names();
  const std::size_t n = names.size();
  std::vector<NamedStratification> out;
  // rho as a word over 0..k-1 using every letter
  std::vector<std::size_t> rho(n, 0);
  while (true) {
    std::size_t k = 0;
    for (auto r : rho) k = std::max(k, r + 1);
    std::vector<bool> hit(k, false);
    for (auto r : rho) hit[r] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
      std::vector<std::string> chain;
      std::string label;
      for (std::size_t e = 0; e < k; ++e) {
        std::string block;
        for (std::size_t v = 0; v < n; ++v)
          if (rho[v] == e) block += (block.empty() ? "" : ",") + names[v];
        chain.push_back("{" + block + "}");
        label += (label.empty() ? "" : "<") + chain.back();
      }
      out.push_back({fixture + ":" + label, fixture, Stratification(a, Poset::chain(chain), rho)});
    }
    std::size_t i = 0;
    while (i < n && ++rho[i] == n) rho[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace stratakit::strat
