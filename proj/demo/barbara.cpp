// Evaluate a few statements on a hand-built model, then search for the least
// countermodel of Barbara with the necessity on the minor premise only.

#include <iostream>

#include "apodeixis/apodeixis.hpp"

int main() {
  using namespace apodeixis;

  // One individual x = (0, 0); A holds of it only at parameter 0.
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{0}, {}}}, {'B', {{0}, {0}}}, {'C', {{0}, {}}}}};
  for (const char* s : {"BaA", "N(CaB)", "N(CaA)", "K(CaA)"}) {
    std::cout << s << "\t" << (holds(m, parse_statement(s)) ? "true" : "false") << "\n";
  }

  const auto [mood, pattern] = parse_mood("Barbara XN?");
  const CheckReport r = verify_up_to(instantiate(mood, pattern), EnumerationBounds{});
  std::cout << r.inference << ": " << to_string(r.outcome) << " after " << r.models_checked << " models\n";
  if (r.countermodel) std::cout << encode_model(*r.countermodel);
}
