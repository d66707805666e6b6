#pragma once

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <regex>
#include <set>
#include <sstream>
#include <string>

namespace khayyam::testing {

/// True when the text parses as XML with an svg root element.
inline bool well_formed_svg(const std::string& svg, std::string* error = nullptr) {
  try {
    std::istringstream in(svg);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    return tree.count("svg") == 1;
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return false;
  }
}

/// Every "#rrggbb" used in a stroke or fill attribute.
inline std::set<std::string> stroke_colors(const std::string& svg) {
  static const std::regex re("(?:stroke|fill)=\"(#[0-9a-f]{6})\"");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.insert((*it)[1].str());
  }
  return out;
}

/// Number of non-overlapping occurrences of needle.
inline std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace khayyam::testing
