package p;

class A {
  String mA(String a) {
    return a;
  }

  <T2> void mT(T2 t) {}
}
