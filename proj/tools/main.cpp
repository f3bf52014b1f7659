#include "divgraph/cli.hpp"

int main(int argc, char** argv) { return divgraph::cli::run(argc, argv); }
