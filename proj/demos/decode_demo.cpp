// Sends one codeword of S_3 over F_2 (k = 3) through a channel that drops
// one dimension and adds one foreign dimension, then decodes it.
#include <iostream>

#include "spreadcode/spreadcode.hpp"

using namespace spreadcode;

int main() {
  const SpreadCode code(2, 3, 3);
  std::cout << "code: " << text::format_header(code) << "  |S|=" << code.size() << " dmin=" << code.min_distance()
            << "\n\n";

  auto rng = trial_rng(2024, {1, 1}, 0);
  const Codeword sent = random_codeword(code, rng);
  std::cout << "sent\n";
  text::write_matrix(std::cout, sent.subspace.basis());

  const ReceivedSpace received = corrupt(sent, {1, 1}, code, rng);
  std::cout << "\nreceived (distance " << subspace_distance(received.space, sent.subspace) << ")\n";
  text::write_matrix(std::cout, received.space.basis());

  ScopedOpCounter ops;
  const DecodeOutcome out = decode(received, code);
  std::cout << "\n" << to_string(out.status) << " using " << ops.elapsed().ext_ops() << " F_{q^k} operations\n";
  if (!out.ok()) return 1;
  text::write_matrix(std::cout, out.codeword->subspace.basis());
  std::cout << (out.codeword->subspace == sent.subspace ? "matches the transmitted codeword\n" : "MISMATCH\n");
  return out.codeword->subspace == sent.subspace ? 0 : 1;
}
