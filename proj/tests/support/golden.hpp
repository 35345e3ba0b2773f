#pragma once

// Expected decompositions for the corpus relations whose published tables are
// internally consistent. Names follow the corpus fixtures; table names are not
// compared, only attribute sets and primary keys.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rdbnorm/normalizer.hpp"

namespace rdbnorm::golden {

struct ExpectedTable {
  std::set<std::string> attributes;
  std::set<std::string> primary_key;

  friend auto operator<=>(const ExpectedTable&, const ExpectedTable&) = default;
};

struct ExpectedRelation {
  std::string_view relation;
  std::vector<ExpectedTable> second;
  std::vector<ExpectedTable> third;
};

inline const std::vector<ExpectedRelation>& table_rows() {
  static const std::vector<ExpectedRelation> rows = {
      {"Beer_Relation",
       {{{"beer", "brewery", "strength", "city", "region"}, {"beer"}},
        {{"beer", "warehouse", "quantity"}, {"beer", "warehouse"}}},
       {{{"beer", "brewery", "strength"}, {"beer"}},
        {{"brewery", "city"}, {"brewery"}},
        {{"city", "region"}, {"city"}},
        {{"beer", "warehouse", "quantity"}, {"beer", "warehouse"}}}},
      {"GH_Relation",
       {{{"G", "H", "F", "I"}, {"G", "H"}},
        {{"G", "A", "B", "C", "D", "E", "J", "K", "L"}, {"G"}}},
       {{{"G", "H", "F", "I"}, {"G", "H"}},
        {{"G", "E", "J"}, {"G"}},
        {{"J", "K"}, {"J"}},
        {{"K", "A", "L"}, {"K"}},
        {{"E", "A", "D"}, {"E"}},
        {{"A", "B", "C"}, {"A"}}}},
      {"ClientRental",
       {{{"clientNo", "cName"}, {"clientNo"}},
        {{"clientNo", "propoertyNo", "rentStart", "rentFinish"}, {"clientNo", "propoertyNo"}},
        {{"propoertyNo", "pAddress", "rent", "ownerNo", "oName"}, {"propoertyNo"}}},
       {{{"clientNo", "cName"}, {"clientNo"}},
        {{"clientNo", "propoertyNo", "rentStart", "rentFinish"}, {"clientNo", "propoertyNo"}},
        {{"propoertyNo", "pAddress", "rent", "ownerNo"}, {"propoertyNo"}},
        {{"ownerNo", "oName"}, {"ownerNo"}}}},
      {"Invoice_Relation",
       {{{"Order_ID", "Product_ID", "Order_Quantity"}, {"Order_ID", "Product_ID"}},
        {{"Product_ID", "Product_Description", "Product_Finish", "Unit_Price"}, {"Product_ID"}},
        {{"Order_ID", "Order_Date", "Customer_ID", "Customer_Name", "Customer_Address"},
         {"Order_ID"}}},
       {{{"Order_ID", "Product_ID", "Order_Quantity"}, {"Order_ID", "Product_ID"}},
        {{"Product_ID", "Product_Description", "Product_Finish", "Unit_Price"}, {"Product_ID"}},
        {{"Order_ID", "Order_Date", "Customer_ID"}, {"Order_ID"}},
        {{"Customer_ID", "Customer_Name", "Customer_Address"}, {"Customer_ID"}}}},
      {"Emp_Relation",
       {{{"emp_id", "emp_name", "emp_phone", "dept_name", "dept_phone", "dept_mgrname"},
         {"emp_id"}},
        {{"skill_id", "skill_name"}, {"skill_id"}},
        {{"emp_id", "skill_id", "skill_date", "skill_lvl"}, {"emp_id", "skill_id"}}},
       {{{"emp_id", "emp_name", "emp_phone", "dept_name"}, {"emp_id"}},
        {{"dept_name", "dept_phone", "dept_mgrname"}, {"dept_name"}},
        {{"skill_id", "skill_name"}, {"skill_id"}},
        {{"emp_id", "skill_id", "skill_date", "skill_lvl"}, {"emp_id", "skill_id"}}}},
      {"Project_Relation",
       {{{"projectCode", "project_title", "project_manager", "project_budget"}, {"projectCode"}},
        {{"employeeNo", "employeeName", "deptNo", "deptName"}, {"employeeNo"}},
        {{"projectCode", "employeeNo", "hourlyRate"}, {"projectCode", "employeeNo"}}},
       {{{"projectCode", "project_title", "project_manager", "project_budget"}, {"projectCode"}},
        {{"employeeNo", "employeeName", "deptNo"}, {"employeeNo"}},
        {{"projectCode", "employeeNo", "hourlyRate"}, {"projectCode", "employeeNo"}},
        {{"deptNo", "deptName"}, {"deptNo"}}}},
  };
  return rows;
}

/// Relations checked semantically instead of by exact tables.
inline const std::vector<std::string_view>& semantic_rows() {
  static const std::vector<std::string_view> rows = {"AB_Relation", "WellmeadowsHospital",
                                                     "StaffPropertyInspection", "Report"};
  return rows;
}

inline std::vector<ExpectedTable> shape_of(const std::vector<TableStructure>& tables) {
  std::vector<ExpectedTable> out;
  for (const auto& t : tables) {
    out.push_back({{t.attributes.begin(), t.attributes.end()},
                   {t.primary_key.begin(), t.primary_key.end()}});
  }
  return out;
}

/// Multiset equality of (attributes, PK) pairs, tolerating at most one
/// produced table that is absent from `expected` and consists only of its key.
inline bool matches(const std::vector<TableStructure>& produced,
                    const std::vector<ExpectedTable>& expected, std::string* why = nullptr) {
  std::vector<ExpectedTable> got = shape_of(produced);
  std::vector<ExpectedTable> want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::vector<ExpectedTable> extra;
  std::vector<ExpectedTable> missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  const bool extra_ok =
      extra.empty() || (extra.size() == 1 && extra[0].attributes == extra[0].primary_key);
  if (missing.empty() && extra_ok) return true;
  if (why != nullptr) {
    std::ostringstream os;
    auto dump = [&](const char* label, const std::vector<ExpectedTable>& ts) {
      for (const auto& t : ts) {
        os << label << " {";
        for (const auto& a : t.attributes) os << ' ' << a;
        os << " } PK {";
        for (const auto& a : t.primary_key) os << ' ' << a;
        os << " }\n";
      }
    };
    dump("missing", missing);
    dump("unexpected", extra);
    *why = os.str();
  }
  return false;
}

}  // namespace rdbnorm::golden
