#include "flowkit/datastore.hpp"

#include <atomic>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

namespace flowkit {

namespace {

bool is_file_scalar(const ValueType& t) {
  switch (t.tag) {
    case ValueType::Tag::Bool:
    case ValueType::Tag::Int:
    case ValueType::Tag::Float:
    case ValueType::Tag::Str:
      return true;
    default:
      return false;
  }
}

// Shortest decimal rendering that parses back to the same double.
std::string render_double(double d) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, d);
    if (std::strtod(buf, nullptr) == d) return buf;
  }
  return buf;
}

std::string render_scalar(const Value& v) {
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_float()) return render_double(v.as_float());
  if (v.is_str()) return v.as_str();
  throw StoreError(StoreErrorKind::TypeMismatch, "not a file-encodable scalar");
}

Value parse_scalar(const ValueType& t, const std::string& text, std::size_t line) {
  auto bad = [&](const char* what) -> StoreError {
    return StoreError(StoreErrorKind::DecodeError, "line " + std::to_string(line) +
                                                       ": invalid " + what + " '" + text + "'");
  };
  switch (t.tag) {
    case ValueType::Tag::Bool:
      if (text == "true") return Value::boolean(true);
      if (text == "false") return Value::boolean(false);
      throw bad("Bool");
    case ValueType::Tag::Int: {
      std::int64_t out = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
      if (ec != std::errc{} || ptr != text.data() + text.size()) throw bad("Int");
      return Value::integer(out);
    }
    case ValueType::Tag::Float: {
      if (text.empty()) throw bad("Float");
      errno = 0;
      char* end = nullptr;
      double out = std::strtod(text.c_str(), &end);
      if (errno != 0 || end != text.c_str() + text.size()) throw bad("Float");
      return Value::real(out);
    }
    case ValueType::Tag::Str:
      return Value::str(text);
    default:
      throw bad("scalar");
  }
}

void require_clean(const std::string& s, bool forbid_comma, const char* where) {
  if (s.find('\n') != std::string::npos)
    throw StoreError(StoreErrorKind::TypeMismatch,
                     std::string(where) + " must not contain newlines: '" + s + "'");
  if (forbid_comma && s.find(',') != std::string::npos)
    throw StoreError(StoreErrorKind::TypeMismatch,
                     std::string(where) + " must not contain commas: '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Split file contents into lines; a missing trailing LF still yields the last
// fragment, which is what makes a comma-separated file read as a FileStore
// silently come back as one long element.
std::vector<std::string> split_lines(const std::string& content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (content[i] == '\n') {
      lines.push_back(content.substr(start, i - start));
      start = i + 1;
    }
  }
  if (start < content.size()) lines.push_back(content.substr(start));
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw StoreError(StoreErrorKind::NotFound, "no such file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  if (f.bad()) throw StoreError(StoreErrorKind::IoError, "read failed: " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw StoreError(StoreErrorKind::IoError, "cannot open for write: " + path);
  f << content;
  f.flush();
  if (!f) throw StoreError(StoreErrorKind::IoError, "write failed: " + path);
}

void check_save_type(const DataStoreRef& ref, const Value& v) {
  if (!v.matches(ref.value_type))
    throw StoreError(StoreErrorKind::TypeMismatch,
                     "value " + v.to_string() + " does not match " + ref.value_type.to_string());
}

// FileStore: one element per line, every line LF-terminated.
std::string encode_file_store(const Value& v) {
  std::string out;
  for (const auto& e : v.as_list()) {
    std::string s = render_scalar(e);
    require_clean(s, false, "FileStore element");
    out += s;
    out += '\n';
  }
  return out;
}

Value decode_file_store(const ValueType& t, const std::string& content) {
  std::vector<Value> items;
  auto lines = split_lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i)
    items.push_back(parse_scalar(t.elem(), lines[i], i + 1));
  return Value::list(std::move(items));
}

// CommaSepFile: all elements on a single comma-separated line.
std::string encode_comma_sep(const Value& v) {
  std::string out;
  const auto& items = v.as_list();
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string s = render_scalar(items[i]);
    require_clean(s, true, "CommaSepFile element");
    if (s.empty())
      throw StoreError(StoreErrorKind::TypeMismatch,
                       "CommaSepFile elements must be non-empty");
    if (i) out += ',';
    out += s;
  }
  return out;
}

Value decode_comma_sep(const ValueType& t, const std::string& content) {
  std::string body = content;
  if (!body.empty() && body.back() == '\n') body.pop_back();
  if (body.find('\n') != std::string::npos)
    throw StoreError(StoreErrorKind::DecodeError, "CommaSepFile has more than one line");
  std::vector<Value> items;
  if (!body.empty()) {
    auto parts = split(body, ',');
    for (std::size_t i = 0; i < parts.size(); ++i)
      items.push_back(parse_scalar(t.elem(), parts[i], 1));
  }
  return Value::list(std::move(items));
}

// CSVStore: one row per element; tuple fields comma-separated; no quoting.
std::string encode_csv(const Value& v) {
  std::string out;
  for (const auto& row : v.as_list()) {
    if (row.is_tuple()) {
      const auto& fs = row.as_tuple();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        std::string s = render_scalar(fs[i]);
        require_clean(s, true, "CSVStore field");
        if (i) out += ',';
        out += s;
      }
    } else {
      std::string s = render_scalar(row);
      require_clean(s, true, "CSVStore field");
      out += s;
    }
    out += '\n';
  }
  return out;
}

Value decode_csv(const ValueType& t, const std::string& content) {
  const ValueType& row_type = t.elem();
  std::vector<Value> rows;
  auto lines = split_lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (row_type.is_tuple()) {
      auto parts = split(lines[i], ',');
      if (parts.size() != row_type.args.size())
        throw StoreError(StoreErrorKind::DecodeError,
                         "line " + std::to_string(i + 1) + ": expected " +
                             std::to_string(row_type.args.size()) + " fields, found " +
                             std::to_string(parts.size()));
      std::vector<Value> fields;
      for (std::size_t j = 0; j < parts.size(); ++j)
        fields.push_back(parse_scalar(row_type.args[j], parts[j], i + 1));
      rows.push_back(Value::tuple(std::move(fields)));
    } else {
      rows.push_back(parse_scalar(row_type, lines[i], i + 1));
    }
  }
  return Value::list(std::move(rows));
}

}  // namespace

struct StoreRegistry::State {
  mutable std::mutex kinds_mu;
  std::map<std::string, std::shared_ptr<const KindImpl>> kinds;

  mutable std::mutex var_mu;
  std::map<std::uint64_t, std::optional<Value>> cells;
  std::uint64_t next_cell = 1;

  mutable std::mutex conf_mu;
  std::string workdir = "./flowkit-out";
};

StoreRegistry& StoreRegistry::global() {
  static StoreRegistry reg;
  return reg;
}

StoreRegistry::StoreRegistry() : state_(std::make_shared<State>()) {
  auto state = state_;

  KindImpl var;
  var.supports = [](const ValueType&) { return true; };
  var.make_empty = [state](const ValueType& vt, const Uuid&, const Uuid&) {
    // A Var ignores its task and job ids: the cell id alone names it.
    std::lock_guard lock(state->var_mu);
    std::uint64_t id = state->next_cell++;
    state->cells.emplace(id, std::nullopt);
    return DataStoreRef{kinds::Var, vt, std::to_string(id)};
  };
  var.fetch = [state](const DataStoreRef& ref) {
    std::lock_guard lock(state->var_mu);
    auto it = state->cells.find(std::strtoull(ref.locator.c_str(), nullptr, 10));
    if (it == state->cells.end() || !it->second.has_value())
      throw StoreError(StoreErrorKind::NotFound, "Var cell " + ref.locator + " holds no value");
    return *it->second;
  };
  var.save = [state](const DataStoreRef& ref, const Value& v) {
    check_save_type(ref, v);
    std::lock_guard lock(state->var_mu);
    auto it = state->cells.find(std::strtoull(ref.locator.c_str(), nullptr, 10));
    if (it == state->cells.end())
      throw StoreError(StoreErrorKind::NotFound, "Var cell " + ref.locator + " does not exist");
    if (it->second.has_value())
      throw StoreError(StoreErrorKind::AlreadySaved,
                       "Var cell " + ref.locator + " was already saved");
    it->second = v;
  };
  register_kind("Var", std::move(var));

  auto file_empty = [state](const char* ext) {
    return [state, ext](const ValueType& vt, const Uuid& task, const Uuid& job) {
      std::string dir;
      {
        std::lock_guard lock(state->conf_mu);
        dir = state->workdir;
      }
      return DataStoreRef{StoreKind{}, vt,
                          dir + "/" + task.to_string() + "_" + job.to_string() + ext};
    };
  };

  KindImpl file_store;
  file_store.supports = [](const ValueType& t) { return t.is_list() && is_file_scalar(t.elem()); };
  file_store.make_empty = [mk = file_empty(".txt")](const ValueType& vt, const Uuid& t,
                                                    const Uuid& j) {
    auto ref = mk(vt, t, j);
    ref.kind = kinds::FileStore;
    return ref;
  };
  file_store.fetch = [](const DataStoreRef& ref) {
    return decode_file_store(ref.value_type, read_file(ref.locator));
  };
  file_store.save = [](const DataStoreRef& ref, const Value& v) {
    check_save_type(ref, v);
    write_file(ref.locator, encode_file_store(v));
  };
  register_kind("FileStore", std::move(file_store));

  KindImpl csv;
  csv.supports = [](const ValueType& t) {
    if (!t.is_list()) return false;
    const auto& row = t.elem();
    if (is_file_scalar(row)) return true;
    if (!row.is_tuple() || row.args.empty()) return false;
    for (const auto& f : row.args)
      if (!is_file_scalar(f)) return false;
    return true;
  };
  csv.make_empty = [mk = file_empty(".csv")](const ValueType& vt, const Uuid& t, const Uuid& j) {
    auto ref = mk(vt, t, j);
    ref.kind = kinds::CSVStore;
    return ref;
  };
  csv.fetch = [](const DataStoreRef& ref) {
    return decode_csv(ref.value_type, read_file(ref.locator));
  };
  csv.save = [](const DataStoreRef& ref, const Value& v) {
    check_save_type(ref, v);
    write_file(ref.locator, encode_csv(v));
  };
  register_kind("CSVStore", std::move(csv));

  KindImpl csl;
  csl.supports = [](const ValueType& t) { return t.is_list() && is_file_scalar(t.elem()); };
  csl.make_empty = [mk = file_empty(".csl")](const ValueType& vt, const Uuid& t, const Uuid& j) {
    auto ref = mk(vt, t, j);
    ref.kind = kinds::CommaSepFile;
    return ref;
  };
  csl.fetch = [](const DataStoreRef& ref) {
    return decode_comma_sep(ref.value_type, read_file(ref.locator));
  };
  csl.save = [](const DataStoreRef& ref, const Value& v) {
    check_save_type(ref, v);
    write_file(ref.locator, encode_comma_sep(v));
  };
  register_kind("CommaSepFile", std::move(csl));
}

void StoreRegistry::register_kind(const std::string& name, KindImpl impl) {
  std::lock_guard lock(state_->kinds_mu);
  state_->kinds[name] = std::make_shared<const KindImpl>(std::move(impl));
}

void StoreRegistry::unregister_kind(const std::string& name) {
  if (name == "Var" || name == "FileStore" || name == "CSVStore" || name == "CommaSepFile")
    throw StoreError(StoreErrorKind::UnknownKind, "cannot unregister built-in kind " + name);
  std::lock_guard lock(state_->kinds_mu);
  state_->kinds.erase(name);
}

bool StoreRegistry::has_kind(const std::string& name) const {
  std::lock_guard lock(state_->kinds_mu);
  return state_->kinds.count(name) > 0;
}

std::shared_ptr<const StoreRegistry::KindImpl> StoreRegistry::impl_for(
    const StoreKind& kind) const {
  std::lock_guard lock(state_->kinds_mu);
  auto it = state_->kinds.find(kind.name);
  if (it == state_->kinds.end())
    throw StoreError(StoreErrorKind::UnknownKind, "store kind not registered: " + kind.name);
  return it->second;
}

bool StoreRegistry::supports(const StoreKind& kind, const ValueType& vt) const {
  std::lock_guard lock(state_->kinds_mu);
  auto it = state_->kinds.find(kind.name);
  return it != state_->kinds.end() && it->second->supports(vt);
}

Value StoreRegistry::fetch(const DataStoreRef& ref) const {
  auto impl = impl_for(ref.kind);
  if (!impl->supports(ref.value_type))
    throw StoreError(StoreErrorKind::UnsupportedValueType,
                     ref.kind.name + " does not carry " + ref.value_type.to_string());
  return impl->fetch(ref);
}

void StoreRegistry::save(const DataStoreRef& ref, const Value& v) const {
  impl_for(ref.kind)->save(ref, v);
}

DataStoreRef StoreRegistry::empty(const StoreKind& kind, const ValueType& vt, const Uuid& task,
                                  const Uuid& job) const {
  auto impl = impl_for(kind);
  if (!impl->supports(vt))
    throw StoreError(StoreErrorKind::UnsupportedValueType,
                     kind.name + " does not carry " + vt.to_string());
  return impl->make_empty(vt, task, job);
}

std::vector<Value> StoreRegistry::fetch_combined(const std::vector<DataStoreRef>& refs) const {
  if (refs.empty())
    throw StoreError(StoreErrorKind::TypeMismatch,
                     "fetch_combined of zero refs: signatures have at least one input");
  std::vector<Value> out;
  out.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    try {
      out.push_back(fetch(refs[i]));
    } catch (const StoreError& e) {
      throw StoreError(e.kind(), "input " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

void StoreRegistry::set_workdir(std::string dir) {
  std::lock_guard lock(state_->conf_mu);
  state_->workdir = std::move(dir);
}

std::string StoreRegistry::workdir() const {
  std::lock_guard lock(state_->conf_mu);
  return state_->workdir;
}

void StoreRegistry::clear_var_cells() {
  std::lock_guard lock(state_->var_mu);
  state_->cells.clear();
}

std::size_t StoreRegistry::var_cell_count() const {
  std::lock_guard lock(state_->var_mu);
  return state_->cells.size();
}

}  // namespace flowkit
