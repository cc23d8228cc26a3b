#include <iostream>

#include "mgs/cli.h"

int main(int argc, char **argv)
{
  return mgs::cli_main(argc, argv, std::cout, std::cerr);
}
