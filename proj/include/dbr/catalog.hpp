#ifndef DBR_CATALOG_HPP
#define DBR_CATALOG_HPP

#include <string>
#include <vector>

#include "dbr/group.hpp"

namespace dbr {

// Resolves a group specification: either a built-in catalog name
// (C<n>, V4, D<2n>, Q8, S3, S4, A4, E<p^k>, "1") or a path to a JSON
// group file. Catalog instances are cached per name, so repeated loads
// share one group object.
GroupPtr load_group(const std::string& spec);

// Names accepted by the catalog, for the CLI listing.
std::vector<std::string> catalog_names();

// Parses a JSON group file {name, order, table, labels?}. The identity
// need not be at index 0; the loader renames it to 0. The full axiom
// check runs on every load.
GroupPtr parse_group_file(const std::string& path);
GroupPtr parse_group_text(const std::string& text, const std::string& origin);

}  // namespace dbr

#endif
