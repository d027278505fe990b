#ifndef FLOWKIT_DATASTORE_HPP
#define FLOWKIT_DATASTORE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "flowkit/errors.hpp"
#include "flowkit/signature.hpp"
#include "flowkit/uuid.hpp"
#include "flowkit/value.hpp"

namespace flowkit {

// A handle naming where a value lives. For Var the locator is a decimal cell
// id into the process-wide cell table; for file kinds it is a path.
struct DataStoreRef {
  StoreKind kind;
  ValueType value_type;
  std::string locator;

  bool operator==(const DataStoreRef&) const = default;
};

// Registry of store kinds. The four built-ins are always present:
//
//   Var          in-memory cell, write-once per job, any value type
//   FileStore    .txt  List of scalars, one element per line, LF-terminated
//   CSVStore     .csv  List of scalars or tuples, one row per element,
//                      fields comma-separated, no quoting
//   CommaSepFile .csl  List of scalars on a single comma-separated line
//
// File encodings are byte-stable: saving equal values yields identical bytes.
// File elements/fields must not contain LF (nor commas for CSV/CommaSepFile);
// CommaSepFile elements must additionally be non-empty, since an empty file
// already denotes the empty list. Fetch of a concurrently replicated ref is
// safe: fetch never consumes, mirroring a read-only memory cell.
class StoreRegistry {
public:
  struct KindImpl {
    std::function<bool(const ValueType&)> supports;
    std::function<Value(const DataStoreRef&)> fetch;
    std::function<void(const DataStoreRef&, const Value&)> save;
    // fresh unsaved ref for (task, job); file kinds place it under workdir
    std::function<DataStoreRef(const ValueType&, const Uuid& task, const Uuid& job)> make_empty;
  };

  static StoreRegistry& global();

  void register_kind(const std::string& name, KindImpl impl);
  void unregister_kind(const std::string& name);  // built-ins cannot be removed
  bool has_kind(const std::string& name) const;
  bool supports(const StoreKind& kind, const ValueType& vt) const;

  Value fetch(const DataStoreRef& ref) const;
  void save(const DataStoreRef& ref, const Value& v) const;
  DataStoreRef empty(const StoreKind& kind, const ValueType& vt, const Uuid& task,
                     const Uuid& job) const;

  // Element-wise fetch over a heterogeneous ref list, values in ref order.
  // There is deliberately no combined save: a task has exactly one output.
  std::vector<Value> fetch_combined(const std::vector<DataStoreRef>& refs) const;

  // Where file-backed empties are created: <workdir>/<task>_<job>.<ext>
  void set_workdir(std::string dir);
  std::string workdir() const;

  // Var cell table; stop_network clears it.
  void clear_var_cells();
  std::size_t var_cell_count() const;

  StoreRegistry();

private:
  struct State;
  std::shared_ptr<State> state_;

  std::shared_ptr<const KindImpl> impl_for(const StoreKind& kind) const;
};

}  // namespace flowkit

#endif
