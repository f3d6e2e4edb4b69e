#include "wfid/checks.hpp"

#include "wfid/elliptic.hpp"
#include "wfid/errors.hpp"
#include "wfid/polyweights.hpp"
#include "wfid/residues.hpp"
#include "wfid/uqrep.hpp"

namespace wfid {

const std::map<std::string, CheckFn>& check_registry() {
  static const std::map<std::string, CheckFn> registry{
      {"jing", &verify_jing},       {"id1", &verify_id},          {"id2", &verify_id},
      {"pp", &verify_pp},           {"resI", &verify_resI},       {"mn", &verify_mn},
      {"detq", &verify_det},        {"deta", &verify_det},        {"idp1", &verify_idp},
      {"idp2", &verify_idp},        {"xx", &verify_xx},           {"xt", &verify_xt},
      {"detprod", &verify_detprod}, {"theta", &verify_theta},     {"rll", &verify_rll},
      {"kbi", &verify_kbi},         {"bc1", &verify_bc},          {"bc2", &verify_bc},
      {"singular", &verify_singular}, {"submodule", &verify_submodule},
  };
  return registry;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : check_registry()) out.push_back(name);
  return out;
}

Report run_check(const RunConfig& cfg) {
  const auto& reg = check_registry();
  const auto it = reg.find(cfg.check);
  if (it == reg.end()) throw UsageError("unknown check '" + cfg.check + "'");
  if (cfg.ell < 0) throw UsageError("ell must be >= 0");
  if (cfg.n < 1) throw UsageError("n must be >= 1");
  if (cfg.trials < 1) throw UsageError("trials must be >= 1");
  if (cfg.height < 1) throw UsageError("height bound must be >= 1");
  if (cfg.order < 0) throw UsageError("order K must be >= 0");
  if (cfg.field == FieldMode::Prime && !is_probable_prime(cfg.prime)) {
    throw UsageError("prime-field modulus " + std::to_string(cfg.prime) + " is not prime");
  }
  return it->second(cfg);
}

}  // namespace wfid
