#include "avoidlab/cli/cli.hpp"

int main(int argc, char** argv) { return avoidlab::cli::dispatch(argc, argv); }
