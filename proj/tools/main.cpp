#include "sncqa/cli.hpp"

int main(int argc, char** argv) { return sncqa::run(argc, argv); }
