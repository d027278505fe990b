#include "flowkit/signature.hpp"

namespace flowkit {

Signature::Signature(std::vector<Port> ins_, std::vector<Port> outs_)
    : ins(std::move(ins_)), outs(std::move(outs_)) {
  if (ins.empty() || outs.empty())
    throw CompositionError(CompositionErrorKind::InvalidPort,
                           "a signature needs at least one input and one output port");
}

std::string ports_to_string(const std::vector<Port>& ports) {
  std::string out = "[";
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (i) out += ", ";
    out += ports[i].to_string();
  }
  return out + "]";
}

std::string Signature::to_string() const {
  return ports_to_string(ins) + " -> " + ports_to_string(outs);
}

Signature compose_then(const Signature& s1, const Signature& s2) {
  if (s1.outs.size() != s2.ins.size())
    throw CompositionError(
        CompositionErrorKind::ArityMismatch,
        "cannot compose: left side produces " + std::to_string(s1.outs.size()) +
            " ports but right side expects " + std::to_string(s2.ins.size()));
  for (std::size_t i = 0; i < s1.outs.size(); ++i) {
    if (!(s1.outs[i] == s2.ins[i]))
      throw CompositionError(CompositionErrorKind::PortMismatch,
                             "cannot compose: port " + std::to_string(i) + ": expected " +
                                 s1.outs[i].to_string() + ", found " + s2.ins[i].to_string(),
                             static_cast<int>(i));
  }
  return Signature(s1.ins, s2.outs);
}

Signature compose_beside(const Signature& s1, const Signature& s2) {
  std::vector<Port> ins = s1.ins;
  ins.insert(ins.end(), s2.ins.begin(), s2.ins.end());
  std::vector<Port> outs = s1.outs;
  outs.insert(outs.end(), s2.outs.begin(), s2.outs.end());
  return Signature(std::move(ins), std::move(outs));
}

}  // namespace flowkit
