#include "patience/cli.hpp"

int main(int argc, char** argv) { return patience::cli::run(argc, argv); }
