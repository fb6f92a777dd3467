#include <contextlab/model.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace contextlab {

namespace {

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorKind::MalformedDistribution, message);
}

// Ids and labels must survive the whitespace-separated system file format.
void check_token(const std::string& token, const char* what) {
  bool bad = token.empty() || token == ":" || token == "=" ||
             std::any_of(token.begin(), token.end(), [](unsigned char c) {
               return std::isspace(c) || c == '#' || !std::isprint(c);
             });
  if (bad) throw Error(ErrorKind::ValidationError, std::string("invalid ") + what + " '" + token + "'");
}

}  // namespace

std::string to_string(const VariableId& id) { return id.content + "@" + id.context; }

bool Context::contains(const std::string& content) const {
  return std::find(members.begin(), members.end(), content) != members.end();
}

std::size_t product_size(std::span<const std::size_t> arity) {
  return std::accumulate(arity.begin(), arity.end(), std::size_t{1}, std::multiplies<>());
}

Outcome decode_outcome(std::size_t flat, std::span<const std::size_t> arity) {
  Outcome outcome(arity.size());
  for (std::size_t i = arity.size(); i-- > 0;) {
    outcome[i] = flat % arity[i];
    flat /= arity[i];
  }
  return outcome;
}

std::size_t encode_outcome(std::span<const std::size_t> outcome, std::span<const std::size_t> arity) {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < arity.size(); ++i) flat = flat * arity[i] + outcome[i];
  return flat;
}

// ---------------------------------------------------------------------------
// Distribution

Distribution::Distribution(std::vector<VariableId> variables, std::vector<std::size_t> arity,
                           std::vector<Rational> probabilities)
    : variables_(std::move(variables)), arity_(std::move(arity)), probabilities_(std::move(probabilities)) {
  for (auto& p : probabilities_) p.canonicalize();
}

void Distribution::validate() const {
  if (variables_.empty()) malformed("distribution over no variables");
  if (variables_.size() != arity_.size()) malformed("arity list does not match variable list");
  std::set<VariableId> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size()) malformed("repeated variable in distribution");
  if (std::any_of(arity_.begin(), arity_.end(), [](std::size_t a) { return a < 2; }))
    malformed("outcome space with fewer than 2 values");
  if (probabilities_.size() != product_size(arity_)) malformed("probability table has wrong size");

  Rational total = 0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (sgn(probabilities_[i]) < 0) malformed("negative probability " + contextlab::to_string(probabilities_[i]));
    total += probabilities_[i];
  }
  if (total != 1) malformed("probabilities sum to " + contextlab::to_string(total) + ", not 1");
}

Distribution Distribution::from_entries(std::vector<VariableId> variables, std::vector<std::size_t> arity,
                                        const std::vector<std::pair<Outcome, Rational>>& entries) {
  if (variables.size() != arity.size()) malformed("arity list does not match variable list");
  std::vector<Rational> dense(product_size(arity), Rational(0));
  std::vector<bool> written(dense.size(), false);
  for (const auto& [outcome, p] : entries) {
    if (outcome.size() != arity.size()) malformed("outcome tuple has wrong length");
    for (std::size_t i = 0; i < outcome.size(); ++i)
      if (outcome[i] >= arity[i]) malformed("outcome index out of range");
    auto flat = encode_outcome(outcome, arity);
    if (written[flat]) malformed("duplicate outcome tuple");
    written[flat] = true;
    dense[flat] = p;
  }
  return from_dense(std::move(variables), std::move(arity), std::move(dense));
}

Distribution Distribution::from_dense(std::vector<VariableId> variables, std::vector<std::size_t> arity,
                                      std::vector<Rational> probabilities) {
  Distribution d(std::move(variables), std::move(arity), std::move(probabilities));
  d.validate();
  return d;
}

const Rational& Distribution::probability(std::span<const std::size_t> outcome) const {
  return probabilities_.at(encode(outcome));
}

std::vector<std::pair<Outcome, Rational>> Distribution::support() const {
  std::vector<std::pair<Outcome, Rational>> out;
  for (std::size_t i = 0; i < probabilities_.size(); ++i)
    if (sgn(probabilities_[i]) != 0) out.emplace_back(decode(i), probabilities_[i]);
  return out;
}

std::size_t Distribution::index_of(const VariableId& variable) const {
  auto it = std::find(variables_.begin(), variables_.end(), variable);
  if (it == variables_.end()) throw Error(ErrorKind::UnknownVariable, contextlab::to_string(variable));
  return static_cast<std::size_t>(it - variables_.begin());
}

Distribution Distribution::marginal(std::span<const VariableId> subset) const {
  if (subset.empty()) throw Error(ErrorKind::UnknownVariable, "empty variable subset");
  std::vector<std::size_t> positions;
  std::vector<std::size_t> kept_arity;
  for (const auto& v : subset) {
    positions.push_back(index_of(v));
    kept_arity.push_back(arity_[positions.back()]);
  }
  if (std::set<std::size_t>(positions.begin(), positions.end()).size() != positions.size())
    throw Error(ErrorKind::UnknownVariable, "repeated variable in subset");

  std::vector<Rational> dense(product_size(kept_arity), Rational(0));
  Outcome projected(positions.size());
  for (std::size_t flat = 0; flat < probabilities_.size(); ++flat) {
    if (sgn(probabilities_[flat]) == 0) continue;
    auto full = decode(flat);
    for (std::size_t i = 0; i < positions.size(); ++i) projected[i] = full[positions[i]];
    dense[encode_outcome(projected, kept_arity)] += probabilities_[flat];
  }
  return Distribution(std::vector<VariableId>(subset.begin(), subset.end()), std::move(kept_arity),
                      std::move(dense));
}

Outcome Distribution::decode(std::size_t flat) const { return decode_outcome(flat, arity_); }

std::size_t Distribution::encode(std::span<const std::size_t> outcome) const {
  if (outcome.size() != arity_.size()) throw Error(ErrorKind::DimensionMismatch, "outcome tuple has wrong length");
  for (std::size_t i = 0; i < outcome.size(); ++i)
    if (outcome[i] >= arity_[i]) throw Error(ErrorKind::DimensionMismatch, "outcome index out of range");
  return encode_outcome(outcome, arity_);
}

// ---------------------------------------------------------------------------
// System

const Content& System::content(const std::string& id) const {
  for (const auto& c : contents_)
    if (c.id == id) return c;
  throw Error(ErrorKind::UnknownContent, id);
}

const Context& System::context(const std::string& id) const {
  for (const auto& c : contexts_)
    if (c.id == id) return c;
  throw Error(ErrorKind::UnknownContext, id);
}

const Bunch& System::bunch(const std::string& context_id) const {
  for (const auto& b : bunches_)
    if (b.context == context_id) return b;
  throw Error(ErrorKind::UnknownContext, context_id);
}

const std::string& System::label(const std::string& content_id, std::size_t value) const {
  return content(content_id).values.at(value);
}

std::vector<VariableId> System::variables() const {
  std::vector<VariableId> out;
  for (const auto& ctx : contexts_)
    for (const auto& q : ctx.members) out.push_back({q, ctx.id});
  std::sort(out.begin(), out.end());
  return out;
}

System build_system(std::vector<Content> contents, std::vector<Context> contexts, std::vector<BunchTable> bunches) {
  std::map<std::string, const Content*> by_id;
  for (const auto& c : contents) {
    check_token(c.id, "content id");
    if (!by_id.emplace(c.id, &c).second)
      throw Error(ErrorKind::ValidationError, "duplicate content '" + c.id + "'");
    if (c.values.size() < 2)
      throw Error(ErrorKind::ValidationError, "content '" + c.id + "' needs at least 2 outcome values");
    std::set<std::string> distinct;
    for (const auto& v : c.values) {
      check_token(v, "outcome value");
      if (!distinct.insert(v).second)
        throw Error(ErrorKind::ValidationError, "content '" + c.id + "' repeats value '" + v + "'");
    }
  }

  std::set<std::string> context_ids;
  std::set<std::string> measured;
  for (const auto& ctx : contexts) {
    check_token(ctx.id, "context id");
    if (!context_ids.insert(ctx.id).second)
      throw Error(ErrorKind::ValidationError, "duplicate context '" + ctx.id + "'");
    if (ctx.members.empty()) throw Error(ErrorKind::ValidationError, "context '" + ctx.id + "' is empty");
    std::set<std::string> members;
    for (const auto& q : ctx.members) {
      if (!by_id.count(q)) throw Error(ErrorKind::UnknownContent, "'" + q + "' in context '" + ctx.id + "'");
      if (!members.insert(q).second)
        throw Error(ErrorKind::ValidationError, "context '" + ctx.id + "' lists '" + q + "' twice");
      measured.insert(q);
    }
  }
  for (const auto& c : contents)
    if (!measured.count(c.id))
      throw Error(ErrorKind::ValidationError, "content '" + c.id + "' is not measured in any context");

  std::map<std::string, Bunch> built;
  for (const auto& table : bunches) {
    auto ctx_it = std::find_if(contexts.begin(), contexts.end(),
                               [&](const Context& c) { return c.id == table.context; });
    if (ctx_it == contexts.end()) throw Error(ErrorKind::UnknownContext, "bunch for '" + table.context + "'");
    if (built.count(table.context)) throw Error(ErrorKind::DuplicateBunch, table.context);

    const Context& ctx = *ctx_it;
    std::vector<std::size_t> column;  // column[i] = member position of table.variables[i]
    for (const auto& q : table.variables) {
      if (!by_id.count(q)) throw Error(ErrorKind::UnknownContent, "'" + q + "' in bunch '" + ctx.id + "'");
      auto m = std::find(ctx.members.begin(), ctx.members.end(), q);
      if (m == ctx.members.end())
        throw Error(ErrorKind::ContextMismatch, "variable (" + q + ", " + ctx.id + ") but '" + q +
                                                    "' is not a member of context '" + ctx.id + "'");
      column.push_back(static_cast<std::size_t>(m - ctx.members.begin()));
    }
    if (std::set<std::size_t>(column.begin(), column.end()).size() != column.size() ||
        column.size() != ctx.members.size())
      throw Error(ErrorKind::ContextMismatch,
                  "bunch '" + ctx.id + "' variables do not match the context's members");

    std::vector<VariableId> vars;
    std::vector<std::size_t> arity;
    for (const auto& q : ctx.members) {
      vars.push_back({q, ctx.id});
      arity.push_back(by_id.at(q)->values.size());
    }

    std::vector<std::pair<Outcome, Rational>> entries;
    for (const auto& [labels, p] : table.entries) {
      if (labels.size() != column.size())
        malformed("bunch '" + ctx.id + "' has an entry with " + std::to_string(labels.size()) + " values, expected " +
                  std::to_string(column.size()));
      Outcome outcome(column.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& values = by_id.at(table.variables[i])->values;
        auto v = std::find(values.begin(), values.end(), labels[i]);
        if (v == values.end())
          malformed("bunch '" + ctx.id + "': '" + labels[i] + "' is not a value of '" + table.variables[i] + "'");
        outcome[column[i]] = static_cast<std::size_t>(v - values.begin());
      }
      entries.emplace_back(std::move(outcome), p);
    }

    try {
      built.emplace(ctx.id, Bunch{ctx.id, Distribution::from_entries(std::move(vars), std::move(arity), entries)});
    } catch (const Error& e) {
      malformed("bunch '" + ctx.id + "': " + e.detail());
    }
  }

  System system;
  for (const auto& ctx : contexts) {
    auto it = built.find(ctx.id);
    if (it == built.end()) throw Error(ErrorKind::ValidationError, "context '" + ctx.id + "' has no bunch");
    system.bunches_.push_back(std::move(it->second));
  }
  system.contents_ = std::move(contents);
  system.contexts_ = std::move(contexts);
  return system;
}

Distribution marginal(const Bunch& bunch, std::span<const VariableId> subset) {
  return bunch.joint.marginal(subset);
}

std::vector<Connection> connections_of(const System& system) {
  std::vector<Connection> out;
  for (const auto& content : system.contents()) {
    Connection conn{content.id, {}, {}};
    for (std::size_t i = 0; i < system.contexts().size(); ++i) {
      const auto& ctx = system.contexts()[i];
      if (!ctx.contains(content.id)) continue;
      VariableId v{content.id, ctx.id};
      conn.variables.push_back(v);
      conn.marginals.push_back(marginal(system.bunches()[i], std::span<const VariableId>(&v, 1)));
    }
    if (conn.variables.size() >= 2) out.push_back(std::move(conn));
  }
  return out;
}

}  // namespace contextlab
