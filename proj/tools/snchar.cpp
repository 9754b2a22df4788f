#include <snchar/cli.hpp>

int main(int argc, char** argv)
{
  return snchar::cli::run(argc, argv);
}
