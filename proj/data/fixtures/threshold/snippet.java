Cipher c = Cipher.getInstance("AES/GCM/NoPadding");
c.init(mode, key);
c.updateAAD(aad);
c.update(c.getIV());
c.update(data);
c.update(trailer);
c.doFinal();
return c;
