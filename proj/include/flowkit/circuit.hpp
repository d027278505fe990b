#ifndef FLOWKIT_CIRCUIT_HPP
#define FLOWKIT_CIRCUIT_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flowkit/errors.hpp"
#include "flowkit/signature.hpp"
#include "flowkit/value.hpp"

namespace flowkit {

// A task: a named body applied to fetched input values, producing one output
// value that the runtime saves into a fresh store of kind out.kind. Bodies
// signal failure by throwing; the runtime turns that into a per-job error.
struct TaskSpec {
  std::string name;
  std::vector<Port> ins;
  Port out;
  std::function<Value(const std::vector<Value>&)> body;
  // When set, the output store is this fixed path under the work directory
  // instead of a fresh <task>_<job> file. Only meaningful for file kinds.
  std::optional<std::string> out_path;
};

struct CircuitRepr;

// An immutable circuit. Built only through the smart constructors below, so
// every reachable Circuit carries a valid cached signature.
class Circuit {
public:
  const Signature& signature() const;
  const CircuitRepr& repr() const { return *repr_; }

private:
  explicit Circuit(std::shared_ptr<const CircuitRepr> r) : repr_(std::move(r)) {}
  std::shared_ptr<const CircuitRepr> repr_;

  friend struct CircuitFactory;
};

struct IdNode {
  Port port;
};
struct ReplicateNode {
  Port port;
};
struct SwapNode {
  Port left;
  Port right;
};
struct DropLNode {
  Port left;
  Port right;
};
struct DropRNode {
  Port left;
  Port right;
};
struct TaskNode {
  TaskSpec spec;
};
struct ThenNode {
  Circuit first;
  Circuit second;
};
struct BesideNode {
  Circuit left;
  Circuit right;
};
struct MapNode {
  Circuit inner;  // must be a one-in one-out Var circuit
  Port in;        // carries List of the inner input type
  Port out;       // carries List of the inner output type
};

using CircuitVariant = std::variant<IdNode, ReplicateNode, SwapNode, DropLNode, DropRNode,
                                    TaskNode, ThenNode, BesideNode, MapNode>;

struct CircuitRepr {
  CircuitVariant node;
  Signature sig;
};

inline const Signature& Circuit::signature() const { return repr_->sig; }

// Smart constructors. Each validates its ports against the store registry and
// throws CompositionError when the pieces do not fit.
Circuit id_(const Port& p);
Circuit replicate_(const Port& p);
Circuit swap_(const Port& p, const Port& q);
Circuit drop_l(const Port& p, const Port& q);
Circuit drop_r(const Port& p, const Port& q);
Circuit task_(TaskSpec spec);
Circuit function_task(std::string name, std::function<Value(const Value&)> f, Port in, Port out);
Circuit then_(const Circuit& c1, const Circuit& c2);
Circuit beside(const Circuit& c1, const Circuit& c2);
Circuit map_c(const Circuit& inner, const Port& in, const Port& out);

// Signature recomputed from structure, independent of the cached one.
Signature signature_of(const Circuit& c);

// Structural equality; task bodies are compared by name and ports.
bool structural_equal(const Circuit& a, const Circuit& b);

// Wiring-diagram-style text tree used by --explain.
std::string render_tree(const Circuit& c);

// Bottom-up fold. Handlers run leftmost child first, once per node
// occurrence; composite handlers receive their children's accumulators.
// A handler that throws aborts the whole fold.
template <class A>
struct Algebra {
  std::function<A(const IdNode&)> id;
  std::function<A(const ReplicateNode&)> replicate;
  std::function<A(const SwapNode&)> swap;
  std::function<A(const DropLNode&)> drop_l;
  std::function<A(const DropRNode&)> drop_r;
  std::function<A(const TaskNode&)> task;
  std::function<A(const ThenNode&, A, A)> then;
  std::function<A(const BesideNode&, A, A)> beside;
  std::function<A(const MapNode&, A)> map;
};

template <class A>
A fold(const Circuit& c, const Algebra<A>& alg) {
  struct Visitor {
    const Algebra<A>& alg;
    A operator()(const IdNode& n) { return alg.id(n); }
    A operator()(const ReplicateNode& n) { return alg.replicate(n); }
    A operator()(const SwapNode& n) { return alg.swap(n); }
    A operator()(const DropLNode& n) { return alg.drop_l(n); }
    A operator()(const DropRNode& n) { return alg.drop_r(n); }
    A operator()(const TaskNode& n) { return alg.task(n); }
    A operator()(const ThenNode& n) {
      A l = fold(n.first, alg);
      A r = fold(n.second, alg);
      return alg.then(n, std::move(l), std::move(r));
    }
    A operator()(const BesideNode& n) {
      A l = fold(n.left, alg);
      A r = fold(n.right, alg);
      return alg.beside(n, std::move(l), std::move(r));
    }
    A operator()(const MapNode& n) {
      A i = fold(n.inner, alg);
      return alg.map(n, std::move(i));
    }
  };
  return std::visit(Visitor{alg}, c.repr().node);
}

}  // namespace flowkit

#endif
