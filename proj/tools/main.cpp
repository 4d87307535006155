#include "hypercount/driver.hpp"

int main(int argc, char** argv) { return hypercount::cli_main(argc, argv); }
