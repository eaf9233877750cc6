package p;

class B implements A {
  D d;

  D bar(C c) {
    return d;
  }
}
