#include "hnc/pairing_check.hpp"

#include <stdexcept>

namespace hnc {

namespace {

AlgebraMatrix rank_one_image() {
  return AlgebraMatrix::diag({AlgebraElement::scalar(1), AlgebraElement{}});
}

}  // namespace

AlgebraMatrix odd_generator_image(const std::string& label) {
  if (label == "[U]") return AlgebraMatrix::scalar(AlgebraElement::U());
  if (label == "[V]") return AlgebraMatrix::scalar(AlgebraElement::V());
  if (label == "[W]") return AlgebraMatrix::scalar(AlgebraElement::W());
  // image of V_a under W -> 1
  if (label == "[V_a]") return AlgebraMatrix::diag({AlgebraElement::V(), AlgebraElement::scalar(1)});
  throw std::invalid_argument("no image for odd class " + label);
}

AlgebraMatrix even_generator_image(const std::string& label) {
  if (label == "[1]") return AlgebraMatrix::identity(1);
  // scalar images of the Bott projections under the one-dimensional representation
  if (label == "[P_a]" || label == "[P_b]") return rank_one_image();
  throw std::invalid_argument("no image for even class " + label);
}

TableVerification verify_pairing_tables(const NumericOptions& opt) {
  const auto [even, odd] = pairing_tables();
  TableVerification rep;
  const auto record = [&rep](EntryCheck e) {
    rep.pass = rep.pass && e.match();
    rep.entries.push_back(std::move(e));
  };

  const std::pair<ModuleName, int> odd_cols[] = {{ModuleName::z1, 0}, {ModuleName::z1prime, 1}};
  for (const auto& [mod, col] : odd_cols)
    for (int row = 0; row < 3; ++row) {
      const auto& label = odd.rows[static_cast<std::size_t>(row)];
      const auto cert = odd_pairing(FredholmModuleSpec::make(mod, opt.index_truncations.front()),
                                    odd_generator_image(label), opt.index_truncations, opt.tol);
      record({"odd", label, odd.cols[static_cast<std::size_t>(col)], static_cast<int>(odd.entries(row, col)), cert.index,
              "Toeplitz index on " + to_string(mod)});
    }

  for (int row = 0; row < 3; ++row) {
    const auto& label = even.rows[static_cast<std::size_t>(row)];
    const auto cert = even_pairing_trace(FredholmModuleSpec::make(ModuleName::z0, 1), even_generator_image(label),
                                         opt.n_commutators, opt.trace);
    record({"even", label, "z0", static_cast<int>(even.entries(row, 0)), cert.value, "trace formula on z0"});
  }

  // d1(w1) is stored as 0: it must pair to zero with every even generator
  const int small = std::max(8, opt.dirac_truncation / 3);
  for (const std::string label : {"[1]", "[P_a]"}) {
    const auto cert = even_pairing_trace(FredholmModuleSpec::make(ModuleName::del1_w1, small),
                                         even_generator_image(label), opt.n_commutators, opt.trace);
    record({"even", label, "d1(w1)", 0, cert.value, "trace formula on del1_w1"});
  }
  // <d1(w1), [P_b]> = <w1, delta_0 [P_b]> = <w1, [W]>
  const auto w = odd_pairing(FredholmModuleSpec::make(ModuleName::w1, opt.index_truncations.front()),
                             odd_generator_image("[W]"), opt.index_truncations, opt.tol);
  record({"even", "[P_b]", "d1(w1)", 0, w.index, "boundary duality with Toeplitz index <w1,[W]>"});
  return rep;
}

BasePairings numeric_base_pairings(const NumericOptions& opt, std::optional<int> dirac_bott) {
  BasePairings b{IntMatrix(2, 2), IntMatrix(2, 2)};
  const auto w0 = FredholmModuleSpec::make(ModuleName::w0, 1);
  b.even(0, 0) = even_pairing_trace(w0, even_generator_image("[1]"), opt.n_commutators, opt.trace).value;
  b.even(1, 0) = even_pairing_trace(w0, rank_one_image(), opt.n_commutators, opt.trace).value;
  const int small = std::max(8, opt.dirac_truncation / 3);
  b.even(0, 1) = even_pairing_trace(FredholmModuleSpec::make(ModuleName::dirac_T2, small), AlgebraMatrix::identity(1),
                                    opt.n_commutators, opt.trace)
                     .value;
  b.even(1, 1) = dirac_bott ? *dirac_bott
                            : dirac_even_pairing(bott_projector(opt.grid, 1.0), opt.dirac_truncation,
                                                 opt.n_commutators, opt.trace)
                                  .value;
  const ModuleName odd_mods[] = {ModuleName::w1, ModuleName::w1prime};
  const char* odd_rows[] = {"[U]", "[W]"};
  for (int col = 0; col < 2; ++col)
    for (int row = 0; row < 2; ++row)
      b.odd(row, col) = odd_pairing(FredholmModuleSpec::make(odd_mods[col], opt.index_truncations.front()),
                                    odd_generator_image(odd_rows[row]), opt.index_truncations, opt.tol)
                            .index;
  return b;
}

}  // namespace hnc
