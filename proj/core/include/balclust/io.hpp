#pragma once

#include <stdexcept>
#include <string>

#include "balclust/graph.hpp"

namespace balclust {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Header "VARIANT n m k eta", then m lines "u v". Blank lines and lines starting with '#' are skipped.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

std::string format_edits(const EditSet& f);

}  // namespace balclust
