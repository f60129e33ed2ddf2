#include "parade/serialize.hpp"

#include <sstream>

#include "parade/congruence.hpp"
#include "parade/factor_set.hpp"
#include "parade/semidirect.hpp"

namespace parade {

namespace {

Json similarity_to_json(const Similarity& g) {
  Json j;
  j["scale"] = g.scale().str();
  Json lin = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.dim(); ++k) row.push_back(g.linear().at(i, k).str());
    lin.push_back(row);
  }
  j["linear"] = lin;
  Json tr = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) tr.push_back(g.translation()[i].str());
  j["translation"] = tr;
  return j;
}

Similarity similarity_from_json(const Json& j, long m) {
  QuadScalar scale = QuadScalar::parse(j.at("scale").get<std::string>(), m);
  const auto& lin = j.at("linear");
  std::size_t d = lin.size();
  QMatrix linear(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      linear.at(i, k) = QuadScalar::parse(lin.at(i).at(k).get<std::string>(), m);
  QVector tr(d);
  for (std::size_t i = 0; i < d; ++i)
    tr[i] = QuadScalar::parse(j.at("translation").at(i).get<std::string>(), m);
  return Similarity(std::move(scale), std::move(linear), std::move(tr));
}

Json charted_to_json(const ChartedPartialGroup& pg) {
  Json j;
  j["kind"] = "charted";
  j["subkind"] = pg.kind();
  Json labels = Json::array();
  for (ElemId e = 0; e < pg.size(); ++e) labels.push_back(pg.label(e));
  j["elements"] = labels;
  j["unit"] = pg.unit();
  Json inv = Json::array();
  for (ElemId e = 0; e < pg.size(); ++e) inv.push_back(pg.inverse(e));
  j["inverse"] = inv;
  j["charts"] = pg.charts();
  Json support = Json::array();
  for (ElemId e = 0; e < pg.size(); ++e)
    for (std::size_t x = 0; x < pg.chart_count(); ++x)
      if (pg.dest_chart(e, x) >= 0) support.push_back(Json::array({x, e, pg.dest_chart(e, x)}));
  j["support"] = support;
  Json products = Json::array();
  for (ElemId a = 0; a < pg.size(); ++a)
    for (ElemId b = 0; b < pg.size(); ++b)
      if (pg.product(a, b) >= 0) products.push_back(Json::array({a, b, pg.product(a, b)}));
  j["products"] = products;
  if (pg.has_ambient_sims()) {
    long m = 0;
    for (const auto& s : pg.ambient_sims()) {
      for (std::size_t i = 0; i < s.dim(); ++i) {
        if (!s.translation()[i].is_rational()) m = s.translation()[i].field_m();
        for (std::size_t k = 0; k < s.dim(); ++k)
          if (!s.linear().at(i, k).is_rational()) m = s.linear().at(i, k).field_m();
      }
      if (!s.scale().is_rational()) m = s.scale().field_m();
    }
    Json amb;
    amb["type"] = "similarity";
    amb["field_m"] = m;
    Json vals = Json::array();
    for (const auto& s : pg.ambient_sims()) vals.push_back(similarity_to_json(s));
    amb["values"] = vals;
    j["ambient"] = amb;
  } else if (pg.has_ambient_group()) {
    Json amb;
    amb["type"] = "group";
    amb["table"] = group_table_to_json(pg.ambient_group());
    Json ids = Json::array();
    for (ElemId e = 0; e < pg.size(); ++e) ids.push_back(pg.ambient_id(e));
    amb["ids"] = ids;
    j["ambient"] = amb;
  }
  return j;
}

ChartedPtr charted_from_json(const Json& j) {
  ChartedPartialGroup::Builder b;
  b.kind = j.value("subkind", "charted");
  for (const auto& l : j.at("elements")) b.labels.push_back(l.get<std::string>());
  b.unit = j.at("unit").get<ElemId>();
  for (const auto& i : j.at("inverse")) b.inverse.push_back(i.get<ElemId>());
  for (const auto& c : j.at("charts")) b.charts.push_back(c.get<std::string>());
  b.dest.assign(b.labels.size(), std::vector<std::int32_t>(b.charts.size(), -1));
  for (const auto& t : j.at("support"))
    b.dest[t.at(1).get<std::size_t>()][t.at(0).get<std::size_t>()] =
        t.at(2).get<std::int32_t>();
  for (const auto& t : j.at("products"))
    b.products.push_back({t.at(0).get<ElemId>(), t.at(1).get<ElemId>(), t.at(2).get<ElemId>()});
  if (j.contains("ambient")) {
    const auto& amb = j.at("ambient");
    if (amb.at("type") == "similarity") {
      long m = amb.at("field_m").get<long>();
      for (const auto& v : amb.at("values")) b.ambient_sims.push_back(similarity_from_json(v, m));
    } else if (amb.at("type") == "group") {
      b.ambient_group = std::make_shared<GroupTable>(group_table_from_json(amb.at("table")));
      for (const auto& i : amb.at("ids")) b.ambient_ids.push_back(i.get<int>());
    }
  }
  return std::make_shared<ChartedPartialGroup>(std::move(b));
}

}  // namespace

Json group_table_to_json(const GroupTable& g) {
  Json j;
  j["name"] = g.name();
  Json labels = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) labels.push_back(g.label(static_cast<int>(i)));
  j["labels"] = labels;
  j["table"] = g.table();
  return j;
}

GroupTable group_table_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
  return GroupTable(j.value("name", "G"), std::move(labels), std::move(table));
}

Json pg_to_json(const PGPtr& pg) {
  Json j;
  j["schema"] = "pg/1";
  if (auto charted = std::dynamic_pointer_cast<const ChartedPartialGroup>(pg)) {
    Json body = charted_to_json(*charted);
    for (auto& [k, v] : body.items()) j[k] = v;
    return j;
  }
  if (auto q = std::dynamic_pointer_cast<const QuotientPartialGroup>(pg)) {
    j["kind"] = "quotient";
    j["base"] = pg_to_json(q->base());
    Json classes = Json::array();
    for (ElemId c = 0; c < q->size(); ++c) classes.push_back(q->members(c));
    j["classes"] = classes;
    return j;
  }
  if (auto s = std::dynamic_pointer_cast<const SemidirectPartialGroup>(pg)) {
    j["kind"] = "semidirect";
    j["f"] = pg_to_json(s->f());
    j["h"] = pg_to_json(s->h());
    Json act;
    if (auto table = std::dynamic_pointer_cast<const TableFAction>(s->action())) {
      act["kind"] = "table";
      act["name"] = table->kind();
      Json step = Json::array();
      for (ElemId eta = 0; eta < s->h()->size(); ++eta) {
        Json row = Json::array();
        for (ElemId g = 0; g < s->f()->size(); ++g) row.push_back(table->step(eta, g));
        step.push_back(row);
      }
      act["step"] = step;
    } else if (std::dynamic_pointer_cast<const AdjointFAction>(s->action())) {
      act["kind"] = "adjoint";
    } else {
      fail(Errc::InvalidArgument, "cannot serialize this action kind");
    }
    j["action"] = act;
    return j;
  }
  if (auto fsp = std::dynamic_pointer_cast<const FactorSetPartialGroup>(pg)) {
    const FactorSet& fs = fsp->factor_set();
    j["kind"] = "factorset";
    j["g"] = group_table_to_json(fs.g);
    j["h"] = pg_to_json(fs.h);
    j["act"] = fs.act;
    j["sigma"] = fs.sigma;
    return j;
  }
  fail(Errc::InvalidArgument, "unsupported realization kind for serialization: " + pg->kind());
}

PGPtr pg_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "charted") return charted_from_json(j);
  if (kind == "quotient") {
    PGPtr base = pg_from_json(j.at("base"));
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (const auto& cls : j.at("classes")) {
      for (std::size_t i = 1; i < cls.size(); ++i)
        pairs.emplace_back(cls.at(0).get<ElemId>(), cls.at(i).get<ElemId>());
    }
    return quotient(base, pairs, 3);
  }
  if (kind == "semidirect") {
    PGPtr f = pg_from_json(j.at("f"));
    PGPtr h = pg_from_json(j.at("h"));
    const auto& act = j.at("action");
    FActionPtr action;
    if (act.at("kind") == "table") {
      std::vector<std::vector<std::int32_t>> step;
      for (const auto& row : act.at("step")) step.push_back(row.get<std::vector<std::int32_t>>());
      action = std::make_shared<TableFAction>(f, h, std::move(step), act.value("name", "table"));
    } else if (act.at("kind") == "adjoint") {
      if (f.get() != h.get()) h = f;
      action = action_adjoint(f);
    } else {
      fail(Errc::ParseError, "unknown action kind");
    }
    return semidirect(f, h, action);
  }
  if (kind == "factorset") {
    FactorSet fs;
    fs.g = group_table_from_json(j.at("g"));
    fs.h = pg_from_json(j.at("h"));
    for (const auto& row : j.at("act")) fs.act.push_back(row.get<std::vector<ElemId>>());
    for (const auto& row : j.at("sigma")) fs.sigma.push_back(row.get<std::vector<ElemId>>());
    return factor_set_product(std::move(fs), 3);
  }
  fail(Errc::ParseError, "unknown realization kind '" + kind + "'");
}

std::string pg_to_string(const PGPtr& pg) { return pg_to_json(pg).dump(2) + "\n"; }

PGPtr pg_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  return pg_from_json(j);
}

std::string dot_chart_graph(const ChartedPartialGroup& pg) {
  std::ostringstream os;
  os << "digraph charts {\n";
  for (std::size_t x = 0; x < pg.chart_count(); ++x)
    os << "  n" << x << " [label=\"" << pg.chart_name(x) << "\"];\n";
  for (ElemId e = 0; e < pg.size(); ++e)
    for (std::size_t x = 0; x < pg.chart_count(); ++x)
      if (pg.dest_chart(e, x) >= 0)
        os << "  n" << x << " -> n" << pg.dest_chart(e, x) << " [label=\"" << pg.label(e)
           << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace parade
